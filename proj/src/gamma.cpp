#include "pascalgamma/gamma.hpp"

namespace pascalgamma {

Rational alpha_entry(long n, long k) {
  if (k < 0 || k > n) {
    throw IndexError("alpha index (" + std::to_string(n) + ", " + std::to_string(k) +
                     ") outside 0 <= k <= n");
  }
  const long z = zero_pow(n + k);
  return Rational(binom(2 * n - 1, n - k) * (2 * k + z), BigInt(n + k + z));
}

Rational beta_entry(long n, long k) {
  if (k < 0 || k > n) {
    throw IndexError("beta index (" + std::to_string(n) + ", " + std::to_string(k) +
                     ") outside 0 <= k <= n");
  }
  if (k == n) return 1;
  const long d = n - k;
  Rational acc;
  for (long j = 0; j <= d; ++j) {
    const BigInt term = binom(k + j - 1, j) * binom(2 * d, d - j) * j;
    acc += Rational(j % 2 == 0 ? term : BigInt(-term), BigInt(d));
  }
  return acc;
}

}  // namespace pascalgamma

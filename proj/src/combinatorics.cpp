#include "pascalgamma/combinatorics.hpp"

#include "pascalgamma/errors.hpp"

namespace pascalgamma {

BigInt binom(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // binom(n, k) = (-1)^k binom(k - n - 1, k) for n < 0.
  BigInt r = binom(k - n - 1, k);
  return (k % 2 == 0) ? r : BigInt(-r);
}

BigInt factorial(long n) {
  if (n < 0) throw IndexError("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt odd_double_factorial(long k) {
  if (k < 0) throw IndexError("odd double factorial needs k >= 0");
  BigInt r = 1;
  for (long j = 1; j <= k; ++j) r *= 2 * j - 1;
  return r;
}

BigInt catalan_number(long n) {
  if (n < 0) throw IndexError("Catalan number of a negative index");
  return BigInt(binom(2 * n, n) / (n + 1));
}

}  // namespace pascalgamma

#pragma once

#include "pascalgamma/rational.hpp"

namespace pascalgamma {

/// Binomial coefficient. Zero for k < 0 and for 0 <= n < k; a negative
/// upper index uses n(n-1)...(n-k+1)/k!, so binom(-1, 0) = 1.
BigInt binom(long n, long k);

BigInt factorial(long n);

/// (2k-1)!! with (-1)!! = 1.
BigInt odd_double_factorial(long k);

/// 0^n with 0^0 = 1.
inline long zero_pow(long n) { return n == 0 ? 1 : 0; }

/// C_n = binom(2n, n) / (n + 1).
BigInt catalan_number(long n);

inline long sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace pascalgamma

#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace ellint {

using BigInt = boost::multiprecision::mpz_int;

/// Gamma function. Negative non-integer arguments go through reflection.
/// Throws PoleError at non-positive integers.
double gamma(double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), a, b > 0.
double beta(double a, double b);

/// Digamma psi(x) for x > 0.
double digamma(double x);

/// Rising factorial a (a+1) ... (a+n-1); (a)_0 = 1.
double pochhammer(double a, int n);

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
BigInt double_factorial(int n);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

BigInt factorial(int n);

}  // namespace ellint

#include "ellint/specfun.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "ellint/errors.hpp"

namespace ellint {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at " + std::to_string(x));
  }
  if (x < 0.5) {
    // Gamma(x) Gamma(1 - x) = pi / sin(pi x)
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * std::tgamma(1.0 - x));
  }
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0");
  return std::lgamma(x);
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta: requires a, b > 0");
  if (a + b < 100.0) return gamma(a) * gamma(b) / gamma(a + b);
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: requires x > 0");
  return boost::math::digamma(x);
}

double pochhammer(double a, int n) {
  if (n < 0) throw DomainError("pochhammer: requires n >= 0");
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

BigInt double_factorial(int n) {
  if (n < -1) throw DomainError("double_factorial: requires n >= -1");
  BigInt r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw DomainError("binomial: requires n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial: requires n >= 0");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace ellint

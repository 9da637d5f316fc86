#include "ellint/hyp.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace ellint {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Number of terms m + 1 if some numerator is -m, otherwise nullopt.
std::optional<int> termination_order(const std::vector<double>& numerators) {
  std::optional<int> best;
  for (double a : numerators) {
    if (is_nonpositive_integer(a)) {
      const int m = static_cast<int>(-a);
      if (!best || m < *best) best = m;
    }
  }
  return best;
}

std::optional<int> termination_order(const std::vector<Rational>& numerators) {
  std::optional<int> best;
  for (const Rational& a : numerators) {
    if (a <= 0 && denominator(a) == 1) {
      const int m = static_cast<int>(-numerator(a));
      if (!best || m < *best) best = m;
    }
  }
  return best;
}

}  // namespace

double hyp2f1(double a, double b, double c, double x) {
  const bool terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (!terminates && !(std::abs(x) < 1.0)) {
    throw DomainError("hyp2f1: series requires |x| < 1");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < kHypTermCap; ++j) {
    if (c + j == 0.0 || is_nonpositive_integer(c + j)) {
      throw PoleError("hyp2f1: denominator parameter hits a pole");
    }
    term *= (a + j) * (b + j) / ((c + j) * (j + 1)) * x;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) < 1e-16 * std::abs(sum) || std::abs(term) < 1e-300) return sum;
  }
  throw ConvergenceError("hyp2f1: term cap of " + std::to_string(kHypTermCap) +
                         " reached");
}

double hyp_terminating(const HypParams& p) {
  const auto order = termination_order(p.numerators);
  if (!order) throw DomainError("hyp_terminating: no non-positive integer numerator");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < *order; ++k) {
    double ratio = p.argument / (k + 1);
    for (double a : p.numerators) ratio *= a + k;
    for (double b : p.denominators) {
      if (b + k == 0.0) throw PoleError("hyp_terminating: denominator pole before termination");
      ratio /= b + k;
    }
    term *= ratio;
    sum += term;
  }
  return sum;
}

Rational hyp_terminating_exact(const ExactHypParams& p) {
  const auto order = termination_order(p.numerators);
  if (!order) throw DomainError("hyp_terminating_exact: no non-positive integer numerator");
  Rational term = 1;
  Rational sum = 1;
  for (int k = 0; k < *order; ++k) {
    Rational ratio = p.argument / (k + 1);
    for (const Rational& a : p.numerators) ratio *= a + k;
    for (const Rational& b : p.denominators) {
      if (b + k == 0) {
        throw PoleError("hyp_terminating_exact: denominator pole before termination");
      }
      ratio /= b + k;
    }
    term *= ratio;
    sum += term;
  }
  return sum;
}

double hyp4f3_terminating(const HypParams& p) {
  if (p.numerators.size() != 4 || p.denominators.size() != 3) {
    throw DomainError("hyp4f3_terminating: needs 4 numerators and 3 denominators");
  }
  return hyp_terminating(p);
}

Rational hyp4f3_terminating_exact(const ExactHypParams& p) {
  if (p.numerators.size() != 4 || p.denominators.size() != 3) {
    throw DomainError("hyp4f3_terminating_exact: needs 4 numerators and 3 denominators");
  }
  return hyp_terminating_exact(p);
}

bool is_balanced(const ExactHypParams& p) {
  Rational num = 1;
  Rational den = 0;
  for (const Rational& a : p.numerators) num += a;
  for (const Rational& b : p.denominators) den += b;
  return num == den;
}

Rational pochhammer_exact(const Rational& a, int n) {
  if (n < 0) throw DomainError("pochhammer_exact: requires n >= 0");
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= a + i;
  return r;
}

TransformSides bailey_transform_check(double x, double y, double z, int m, double u,
                                      double v, double w) {
  if (m < 0) throw DomainError("bailey_transform_check: requires m >= 0");
  const double md = m;
  if (std::abs(1.0 + x + y + z - md - (u + v + w)) > 1e-12 * (1.0 + std::abs(u + v + w))) {
    throw DomainError("bailey_transform_check: series is not balanced");
  }
  const double lhs = hyp4f3_terminating({{x, y, z, -md}, {u, v, w}, 1.0});
  double prefactor = 1.0;
  for (int i = 0; i < m; ++i) {
    prefactor *= (v - z + i) * (w - z + i) / ((v + i) * (w + i));
  }
  const double rhs =
      prefactor * hyp4f3_terminating({{u - x, u - y, z, -md},
                                      {1.0 - v + z - md, 1.0 - w + z - md, u},
                                      1.0});
  return {lhs, rhs};
}

ExactTransformSides bailey_transform_check_exact(const Rational& x, const Rational& y,
                                                 const Rational& z, int m,
                                                 const Rational& u, const Rational& v,
                                                 const Rational& w) {
  if (m < 0) throw DomainError("bailey_transform_check_exact: requires m >= 0");
  const Rational mm = m;
  const ExactHypParams left{{x, y, z, -mm}, {u, v, w}, 1};
  if (!is_balanced(left)) {
    throw DomainError("bailey_transform_check_exact: series is not balanced");
  }
  const Rational lhs = hyp4f3_terminating_exact(left);
  const Rational prefactor = pochhammer_exact(v - z, m) * pochhammer_exact(w - z, m) /
                             (pochhammer_exact(v, m) * pochhammer_exact(w, m));
  const Rational rhs =
      prefactor * hyp4f3_terminating_exact(
                      {{u - x, u - y, z, -mm}, {1 - v + z - mm, 1 - w + z - mm, u}, 1});
  return {lhs, rhs};
}

HarmonicInstance harmonic_transform_instance(int j) {
  if (j < 1) throw DomainError("harmonic_transform_instance: requires j >= 1");
  const Rational three_halves(3, 2);
  return {Rational(1 - j), Rational(1), Rational(1), three_halves - j,
          three_halves - j, Rational(2), j - 1};
}

double series_k(double m) {
  return std::numbers::pi / 2 * hyp2f1(0.5, 0.5, 1.0, m);
}

double series_e(double m) {
  return std::numbers::pi / 2 * hyp2f1(-0.5, 0.5, 1.0, m);
}

}  // namespace ellint

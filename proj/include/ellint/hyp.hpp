#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <vector>

#include "ellint/errors.hpp"

namespace ellint {

using Rational = boost::multiprecision::mpq_rational;

/// Parameters of a generalized hypergeometric series pFq(numerators;
/// denominators; argument).
struct HypParams {
  std::vector<double> numerators;
  std::vector<double> denominators;
  double argument = 1.0;
};

struct ExactHypParams {
  std::vector<Rational> numerators;
  std::vector<Rational> denominators;
  Rational argument = 1;
};

inline constexpr int kHypTermCap = 100000;

/// 2F1(a, b; c; x) by the term-ratio recurrence. Requires |x| < 1 unless a
/// or b is a non-positive integer. Stops once |term| < 1e-16 |sum| (absolute
/// floor 1e-300); throws ConvergenceError after kHypTermCap terms and
/// PoleError if c hits a non-positive integer before the series ends.
double hyp2f1(double a, double b, double c, double x);

/// Terminating pFq with one numerator equal to -m (m >= 0 integer): the
/// finite sum of m + 1 terms.
double hyp_terminating(const HypParams& p);

/// Exact terminating pFq in rational arithmetic.
Rational hyp_terminating_exact(const ExactHypParams& p);

/// 4F3 at x = 1 with one numerator -m; same as hyp_terminating with the arity
/// checked.
double hyp4f3_terminating(const HypParams& p);
Rational hyp4f3_terminating_exact(const ExactHypParams& p);

/// 1 + sum(numerators) == sum(denominators).
bool is_balanced(const ExactHypParams& p);

struct TransformSides {
  double lhs;
  double rhs;
};

struct ExactTransformSides {
  Rational lhs;
  Rational rhs;
};

/// Both sides of the balanced terminating 4F3 transformation
///   4F3(x, y, z, -m; u, v, w; 1)
///     = (v-z)_m (w-z)_m / ((v)_m (w)_m)
///       * 4F3(u-x, u-y, z, -m; 1-v+z-m, 1-w+z-m, u; 1).
TransformSides bailey_transform_check(double x, double y, double z, int m, double u,
                                      double v, double w);
ExactTransformSides bailey_transform_check_exact(const Rational& x, const Rational& y,
                                                 const Rational& z, int m,
                                                 const Rational& u, const Rational& v,
                                                 const Rational& w);

/// Parameters of the transformation instance used in the harmonic-sum proof:
/// x = 1 - j, y = z = 1, m = j - 1, u = v = 3/2 - j, w = 2.
struct HarmonicInstance {
  Rational x, y, z, u, v, w;
  int m;
};
HarmonicInstance harmonic_transform_instance(int j);

/// K(k) = (pi/2) 2F1(1/2, 1/2; 1; m).
double series_k(double m);
/// E(k) = (pi/2) 2F1(-1/2, 1/2; 1; m).
double series_e(double m);

/// Exact rising factorial.
Rational pochhammer_exact(const Rational& a, int n);

}  // namespace ellint

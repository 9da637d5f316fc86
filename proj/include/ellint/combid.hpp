#pragma once

#include <utility>
#include <vector>

#include "ellint/hyp.hpp"
#include "ellint/specfun.hpp"

namespace ellint {

// Exact identity checks behind the series evaluations. Everything here is in
// rational arithmetic; equality means equality of reduced fractions.

/// sum_{nu=0}^{k} (-1)^nu C(2j+1, nu). Equals (-1)^k C(2j, k).
Rational alt_binomial_sum(int j, int k);

/// Coefficient c_j with int_0^inf sin^{2j+1}(x)/x dx = c_j pi/2, through the
/// binomial expansion of sin^{2j+1} and the alternating-sum lemma.
Rational sin_power_integral(int j);

/// (2j-1)!! / (2j)!!.
Rational double_factorial_ratio(int j);

/// (1/2)_j / j!, the Wallis coefficient of int_0^{pi/2} sin^{2j} = c pi/2.
Rational wallis_coefficient(int j);

/// a_r = ((1/2)_r / r!)^2.
Rational central_coefficient(int r);

/// h_j = sum_{i=0}^{j-1} 1/(2i+1).
Rational odd_harmonic(int j);

struct RationalSides {
  Rational lhs;
  Rational rhs;
};

/// lhs = sum_{i<j} a_i/(j-i), rhs = 4 a_j h_j.
RationalSides harmonic_lemma_sides(int j);

/// Batch version for 1..j_max sharing the a_i table.
std::vector<RationalSides> harmonic_lemma_table(int j_max);

/// The certificate pair of the automatic proof.
Rational certificate_f(int i, int j);
Rational certificate_g(int i, int j);

/// F(i, j+1) - F(i, j) - G(i+1, j) + G(i, j); zero for 0 <= i < j.
Rational telescoping_certificate(int i, int j);

/// G(j, j) - G(0, j), the telescoped boundary term; equals -4j^2/(2j+1)^2.
Rational telescoped_boundary(int j);

/// a(j) = sum_{i<j} F(i, j) and b(j) = sum_{i<j} 4/(2i+1).
Rational certificate_a(int j);
Rational certificate_b(int j);

struct RecurrenceSteps {
  Rational a_step;  // a(j+1) - a(j)
  Rational b_step;  // b(j+1) - b(j)
};
RecurrenceSteps certificate_recurrence_check(int j);

struct AlphaBeta {
  Rational alpha;
  Rational beta;
};

/// alpha_{j+1} = (j + 1/2) alpha_j - beta_j, beta_{j+1} = (j + 1/2) beta_j
/// from alpha_0 = 0, beta_0 = 1.
AlphaBeta alpha_beta_sequence(int j);

struct PartialFractionCheck {
  double lhs;          // tan(pi b / 2)
  double rhs_partial;  // (4b/pi) sum_{j=1}^{N} 1/((2j-1)^2 - b^2)
  double fitted_c;     // N |lhs - rhs_partial|
};

/// Throws PoleError when b is an odd integer.
PartialFractionCheck cot_partial_fraction_check(double b, long terms);

/// Coefficients (divided by pi) of (1-m)^j in the two expansions around
/// m = 1 used for the log integral:
///   first  = -(1/2) a_j h_j             from the log-moment route,
///   second = -(1/8) sum_{i<j} a_i/(j-i) from (1/4) ln m K(sqrt(1-m)).
std::vector<std::pair<Rational, Rational>> log_series_coefficients(int j_max);

/// The closing chain of the hypergeometric proof of the harmonic lemma at
/// index j:
///   [0] (2j-1)/j sum_{k<j} (1/2)_k (1/2-j)_k / ((3/2)_k (3/2-j)_k)
///   [1] (2j-1)^2/j sum_{k<j} 1/((2k+1)(2j-1-2k))
///   [2] (2j-1)^2/(2j^2) sum_{k<j} (1/(2k+1) + 1/(2j-1-2k))
///   [3] (2j-1)^2/j^2 h_j
std::vector<Rational> lemma_simplification_chain(int j);

}  // namespace ellint

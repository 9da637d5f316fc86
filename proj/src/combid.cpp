#include "ellint/combid.hpp"

#include <cmath>
#include <numbers>

#include "ellint/errors.hpp"

namespace ellint {

namespace {

const Rational kHalf(1, 2);

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Rational alt_binomial_sum(int j, int k) {
  require(j >= 0 && k >= 0 && k <= j, "alt_binomial_sum: requires 0 <= k <= j");
  BigInt sum = 0;
  for (int nu = 0; nu <= k; ++nu) {
    const BigInt c = binomial(2 * j + 1, nu);
    sum += nu % 2 == 0 ? c : BigInt(-c);
  }
  return Rational(sum);
}

Rational sin_power_integral(int j) {
  require(j >= 0, "sin_power_integral: requires j >= 0");
  // sin^{2j+1} x = 2^{-2j} sum_{nu=0}^{j} (-1)^{j-nu} C(2j+1, nu) sin((2j-2nu+1) x),
  // and each sin(alpha x)/x integrates to pi/2.
  const Rational signed_sum = (j % 2 == 0 ? 1 : -1) * alt_binomial_sum(j, j);
  return signed_sum / Rational(BigInt(1) << (2 * j));
}

Rational double_factorial_ratio(int j) {
  require(j >= 0, "double_factorial_ratio: requires j >= 0");
  return Rational(double_factorial(2 * j - 1), double_factorial(2 * j));
}

Rational wallis_coefficient(int j) {
  require(j >= 0, "wallis_coefficient: requires j >= 0");
  return pochhammer_exact(kHalf, j) / Rational(factorial(j));
}

Rational central_coefficient(int r) {
  const Rational w = wallis_coefficient(r);
  return w * w;
}

Rational odd_harmonic(int j) {
  require(j >= 0, "odd_harmonic: requires j >= 0");
  Rational h = 0;
  for (int i = 0; i < j; ++i) h += Rational(1, 2 * i + 1);
  return h;
}

std::vector<RationalSides> harmonic_lemma_table(int j_max) {
  require(j_max >= 1, "harmonic_lemma_table: requires j_max >= 1");
  std::vector<Rational> a(static_cast<std::size_t>(j_max) + 1);
  a[0] = 1;
  for (int r = 1; r <= j_max; ++r) {
    const Rational step = Rational(2 * r - 1, 2 * r);
    a[static_cast<std::size_t>(r)] = a[static_cast<std::size_t>(r) - 1] * step * step;
  }
  std::vector<RationalSides> out;
  out.reserve(static_cast<std::size_t>(j_max));
  Rational h = 0;
  for (int j = 1; j <= j_max; ++j) {
    h += Rational(1, 2 * j - 1);
    Rational lhs = 0;
    for (int i = 0; i < j; ++i) lhs += a[static_cast<std::size_t>(i)] / (j - i);
    out.push_back({lhs, 4 * a[static_cast<std::size_t>(j)] * h});
  }
  return out;
}

RationalSides harmonic_lemma_sides(int j) {
  require(j >= 1, "harmonic_lemma_sides: requires j >= 1");
  return harmonic_lemma_table(j).back();
}

Rational certificate_f(int i, int j) {
  require(i >= 0 && i < j, "certificate_f: requires 0 <= i < j");
  const Rational ratio = wallis_coefficient(i) / wallis_coefficient(j);
  return ratio * ratio / (j - i);
}

Rational certificate_g(int i, int j) {
  require(i >= 0 && j >= 0 && i <= j, "certificate_g: requires 0 <= i <= j");
  // (1/2)_{j+1}^2 / j!^2 = ((1/2)_j / j!)^2 (j + 1/2)^2
  const Rational ratio =
      wallis_coefficient(i) / (wallis_coefficient(j) * (Rational(j) + kHalf));
  return -ratio * ratio * Rational(i * i, j - i + 1);
}

Rational telescoping_certificate(int i, int j) {
  require(i >= 0 && i < j, "telescoping_certificate: requires 0 <= i < j");
  return certificate_f(i, j + 1) - certificate_f(i, j) - certificate_g(i + 1, j) +
         certificate_g(i, j);
}

Rational telescoped_boundary(int j) {
  require(j >= 1, "telescoped_boundary: requires j >= 1");
  return certificate_g(j, j) - certificate_g(0, j);
}

Rational certificate_a(int j) {
  require(j >= 1, "certificate_a: requires j >= 1");
  Rational a = 0;
  for (int i = 0; i < j; ++i) a += certificate_f(i, j);
  return a;
}

Rational certificate_b(int j) {
  require(j >= 1, "certificate_b: requires j >= 1");
  return 4 * odd_harmonic(j);
}

RecurrenceSteps certificate_recurrence_check(int j) {
  require(j >= 1, "certificate_recurrence_check: requires j >= 1");
  return {certificate_a(j + 1) - certificate_a(j), certificate_b(j + 1) - certificate_b(j)};
}

AlphaBeta alpha_beta_sequence(int j) {
  require(j >= 0, "alpha_beta_sequence: requires j >= 0");
  Rational alpha = 0;
  Rational beta = 1;
  for (int i = 0; i < j; ++i) {
    const Rational factor = Rational(i) + kHalf;
    alpha = factor * alpha - beta;
    beta = factor * beta;
  }
  return {alpha, beta};
}

PartialFractionCheck cot_partial_fraction_check(double b, long terms) {
  require(terms >= 1, "cot_partial_fraction_check: requires N >= 1");
  const double r = std::remainder(b, 2.0);
  if (std::abs(std::abs(r) - 1.0) < 1e-15) {
    throw PoleError("cot_partial_fraction_check: tan(pi b/2) has a pole at odd b");
  }
  // Summed from the small tail terms upward.
  double sum = 0.0;
  for (long j = terms; j >= 1; --j) {
    const double odd = 2.0 * static_cast<double>(j) - 1.0;
    sum += 1.0 / (odd * odd - b * b);
  }
  const double rhs = 4.0 * b / std::numbers::pi * sum;
  const double lhs = std::tan(std::numbers::pi * b / 2.0);
  return {lhs, rhs, static_cast<double>(terms) * std::abs(lhs - rhs)};
}

std::vector<std::pair<Rational, Rational>> log_series_coefficients(int j_max) {
  require(j_max >= 0, "log_series_coefficients: requires j_max >= 0");
  std::vector<Rational> a;
  for (int r = 0; r <= j_max; ++r) a.push_back(central_coefficient(r));
  std::vector<std::pair<Rational, Rational>> out;
  for (int j = 0; j <= j_max; ++j) {
    const Rational first = -a[static_cast<std::size_t>(j)] * odd_harmonic(j) / 2;
    Rational conv = 0;
    for (int i = 0; i < j; ++i) conv += a[static_cast<std::size_t>(i)] / (j - i);
    out.emplace_back(first, -conv / 8);
  }
  return out;
}

std::vector<Rational> lemma_simplification_chain(int j) {
  require(j >= 1, "lemma_simplification_chain: requires j >= 1");
  const Rational three_halves(3, 2);
  const Rational tj = 2 * j - 1;
  Rational hyp = 0;
  Rational term = 1;
  for (int k = 0; k < j; ++k) {
    hyp += term;
    term *= (kHalf + k) * (kHalf - j + k) / ((three_halves + k) * (three_halves - j + k));
  }
  Rational products = 0;
  Rational pairs = 0;
  for (int k = 0; k < j; ++k) {
    products += Rational(1, (2 * k + 1) * (2 * j - 1 - 2 * k));
    pairs += Rational(1, 2 * k + 1) + Rational(1, 2 * j - 1 - 2 * k);
  }
  return {tj / j * hyp, tj * tj / j * products, tj * tj / (2 * j * j) * pairs,
          tj * tj / (j * j) * odd_harmonic(j)};
}

}  // namespace ellint

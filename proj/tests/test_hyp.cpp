#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ellint/combid.hpp"
#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"
#include "ellint/hyp.hpp"

using namespace ellint;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("hyp2f1 examples") {
  CHECK(hyp2f1(0.5, 0.5, 1, 0) == 1.0);
  for (double m : {0.1, 0.4, 0.7}) {
    CHECK(kPi / 2 * hyp2f1(0.5, 0.5, 1, m) ==
          doctest::Approx(ellip_k(Modulus::from_k(std::sqrt(m)))).epsilon(1e-12));
  }
  for (double a : {0.3, 1.0, 2.5}) {
    for (double x : {-0.5, 0.2, 0.6}) {
      CHECK(hyp2f1(a, 0.7, 0.7, x) == doctest::Approx(std::pow(1 - x, -a)).epsilon(1e-13));
    }
  }
  CHECK(hyp2f1(-3, 1, 2, 0.5) == doctest::Approx(1 - 0.75 + 0.25 - 0.03125).epsilon(1e-15));
  CHECK_THROWS_AS(hyp2f1(0.5, 0.5, -2, 0.5), PoleError);
  CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 1, 1.0), DomainError);
  CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 1, 0.99999999), ConvergenceError);
}

TEST_CASE("E series invariant") {
  for (int i = 1; i <= 7; ++i) {
    const double m = i / 10.0;
    CHECK(kPi / 2 * hyp2f1(-0.5, 0.5, 1, m) ==
          doctest::Approx(ellip_e(Modulus::from_k(std::sqrt(m)))).epsilon(1e-12));
    CHECK(series_k(m) == doctest::Approx(ellip_k(Modulus::from_k(std::sqrt(m)))).epsilon(1e-12));
    CHECK(series_e(m) == doctest::Approx(ellip_e(Modulus::from_k(std::sqrt(m)))).epsilon(1e-12));
  }
}

TEST_CASE("terminating 4F3") {
  const HypParams p{{0, 1, 2, 3}, {4, 5, 6}, 1};
  CHECK(hyp4f3_terminating(p) == 1.0);
  const ExactHypParams e{{Rational(-2), Rational(1), Rational(1), Rational(1, 2)},
                         {Rational(2), Rational(3), Rational(5, 2)},
                         Rational(1)};
  const Rational expected = Rational(1) - Rational(1, 15) + Rational(1, 210);
  CHECK(hyp4f3_terminating_exact(e) == expected);
  CHECK(hyp4f3_terminating(HypParams{{-2, 1, 1, 0.5}, {2, 3, 2.5}, 1}) ==
        doctest::Approx(expected.convert_to<double>()).epsilon(1e-15));
  CHECK_THROWS_AS(hyp4f3_terminating(HypParams{{-2, 1, 1}, {2, 3, 2.5}, 1}), DomainError);
  CHECK_THROWS_AS(hyp4f3_terminating(HypParams{{-3, 1, 1, 1}, {-1, 3, 2.5}, 1}), PoleError);
  CHECK_THROWS_AS(hyp4f3_terminating(HypParams{{0.5, 1, 1, 1}, {2, 3, 2.5}, 1}), DomainError);
}

TEST_CASE("paper's transform instance is balanced and holds exactly") {
  for (int j = 1; j <= 20; ++j) {
    const HarmonicInstance h = harmonic_transform_instance(j);
    const ExactHypParams p{{h.x, h.y, h.z, Rational(-h.m)}, {h.u, h.v, h.w}, Rational(1)};
    CHECK(is_balanced(p));
    const ExactTransformSides s =
        bailey_transform_check_exact(h.x, h.y, h.z, h.m, h.u, h.v, h.w);
    CAPTURE(j);
    CHECK(s.lhs == s.rhs);
    const TransformSides f = bailey_transform_check(
        h.x.convert_to<double>(), h.y.convert_to<double>(), h.z.convert_to<double>(), h.m,
        h.u.convert_to<double>(), h.v.convert_to<double>(), h.w.convert_to<double>());
    CHECK(std::abs(f.lhs - f.rhs) <= 1e-12 * std::abs(f.lhs));
    CHECK(f.lhs == doctest::Approx(s.lhs.convert_to<double>()).epsilon(1e-12));
  }
  const TransformSides s0 = bailey_transform_check(0.3, 0.7, 1.1, 0, 1.4, 0.9, 0.8);
  CHECK(s0.lhs == 1.0);
  CHECK(s0.rhs == 1.0);
}

TEST_CASE("transform on random balanced rational parameters") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(1, 40);
  int checked = 0;
  while (checked < 30) {
    const Rational x(num(rng), 7);
    const Rational y(num(rng), 5);
    const Rational z(num(rng), 3);
    const int m = static_cast<int>(rng() % 7);
    const Rational v(num(rng), 11);
    const Rational w(num(rng), 13);
    // balance: 1 + x + y + z - m = u + v + w
    const Rational u = 1 + x + y + z - m - v - w;
    if (u <= 0) continue;
    const ExactTransformSides s = bailey_transform_check_exact(x, y, z, m, u, v, w);
    CHECK(s.lhs == s.rhs);
    ++checked;
  }
  CHECK_THROWS_AS(bailey_transform_check_exact(Rational(1), Rational(1), Rational(1), 2,
                                               Rational(1), Rational(1), Rational(1)),
                  DomainError);
}

TEST_CASE("simplification chain") {
  for (int j = 1; j <= 50; ++j) {
    const std::vector<Rational> chain = lemma_simplification_chain(j);
    REQUIRE(chain.size() >= 2);
    for (const Rational& form : chain) CHECK(form == chain.front());
  }
}

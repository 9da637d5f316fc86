#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "ellint/errors.hpp"
#include "ellint/hyp.hpp"
#include "ellint/specfun.hpp"

using namespace ellint;

namespace {

constexpr double kPi = std::numbers::pi;

// 50-digit reference values (mpmath), rounded to 30 significant digits.
struct GammaPoint {
  double x;
  const char* value;
};
constexpr GammaPoint kGammaTable[] = {
    {0.1, "9.51350769866873183629248717727"},
    {0.25, "3.62560990822190831193068515587"},
    {0.5, "1.77245385090551602729816748334"},
    {0.75, "1.22541670246517764512909830336"},
    {1, "1.0"},
    {1.5, "0.886226925452758013649083741671"},
    {2.5, "1.32934038817913702047362561251"},
    {3.3, "2.68343738195576879359632731477"},
    {4, "6.0"},
    {5.5, "52.3427777845535201811490084924"},
    {7, "720.0"},
    {9.25, "69106.2268950893831658117191217"},
    {12, "39916800.0"},
    {15.5, "334838609873.556456972418178992"},
    {20, "121645100408832000.0"},
    {25, "620448401733239439360000.0"},
    {-0.5, "-3.54490770181103205459633496668"},
    {-1.5, "2.36327180120735470306422331112"},
    {-2.7, "-0.931082784838963780987400098321"},
    {33.3, "7.4875775965227066079920662546e+35"},
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma matches the 50-digit table") {
  for (const GammaPoint& p : kGammaTable) {
    CAPTURE(p.x);
    CHECK(rel(ellint::gamma(p.x), std::stod(p.value)) < 1e-13);
  }
}

TEST_CASE("gamma examples and poles") {
  CHECK(ellint::gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
  CHECK(ellint::gamma(5) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK_THROWS_AS(ellint::gamma(0.0), PoleError);
  CHECK_THROWS_AS(ellint::gamma(-3.0), PoleError);
  CHECK_THROWS_AS(ellint::gamma(-3.0), DomainError);
}

TEST_CASE("gamma reflection") {
  for (int i = 1; i <= 9; ++i) {
    const double a = i / 10.0;
    const double target = kPi / std::sin(kPi * a);
    CAPTURE(a);
    CHECK(std::abs(ellint::gamma(a) * ellint::gamma(1 - a) - target) <= 1e-12 * std::abs(target));
  }
}

TEST_CASE("gamma recurrence") {
  for (double x = 0.1; x <= 20.0; x += 0.37) {
    CAPTURE(x);
    CHECK(rel(ellint::gamma(x + 1), x * ellint::gamma(x)) <= 1e-13);
  }
}

TEST_CASE("log_gamma, beta, digamma") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0));
  CHECK(rel(log_gamma(33.3), std::log(7.4875775965227066079920662546e+35)) < 1e-14);
  CHECK(rel(beta(0.5, 0.5), kPi) < 1e-14);
  CHECK(rel(beta(2.0, 3.0), 1.0 / 12.0) < 1e-14);
  CHECK(rel(beta(60.5, 70.25), std::exp(log_gamma(60.5) + log_gamma(70.25) - log_gamma(130.75))) <
        1e-12);
  CHECK(rel(digamma(0.5), -1.9635100260214234794) < 1e-14);
  CHECK(rel(digamma(1.0), -0.57721566490153286061) < 1e-14);
}

TEST_CASE("pochhammer equals gamma ratio") {
  CHECK(pochhammer(0.5, 0) == 1.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
  for (double a : {0.25, 0.5, 1.7, 3.0}) {
    for (int n = 0; n <= 15; ++n) {
      CAPTURE(a);
      CAPTURE(n);
      CHECK(rel(pochhammer(a, n), ellint::gamma(a + n) / ellint::gamma(a)) <= 1e-12);
    }
  }
}

TEST_CASE("integer helpers") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(8) == 384);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, 9) == 0);
  CHECK(binomial(7, -1) == 0);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("(2j-1)!!/(2j)!! = (1/2)_j / j! exactly") {
  for (int j = 0; j <= 200; ++j) {
    const Rational lhs(double_factorial(2 * j - 1), double_factorial(2 * j));
    const Rational rhs = pochhammer_exact(Rational(1, 2), j) / Rational(factorial(j));
    REQUIRE(lhs == rhs);
  }
}

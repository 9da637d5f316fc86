#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"
#include "ellint/hyp.hpp"
#include "ellint/quad.hpp"
#include "ellint/specfun.hpp"

using namespace ellint;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Modulus mk(double k) { return Modulus::from_k(k); }

// K and E at k = 1/2 (mpmath, 30 digits).
constexpr double kKHalf = 1.6857503548125960428712036578;
constexpr double kEHalf = 1.46746220933942715545979526699;

}  // namespace

TEST_CASE("Modulus fields") {
  for (double k : {0.0, 0.1, 0.5, 0.9, 0.9999}) {
    const Modulus mod = mk(k);
    CHECK(mod.m() == k * k);
    CHECK(std::abs(mod.m() + mod.k_prime() * mod.k_prime() - 1.0) <= 1e-15);
    CHECK(mod.k_prime() > 0.0);
  }
  CHECK_THROWS_AS(mk(1.0), DomainError);
  CHECK_THROWS_AS(mk(-0.1), DomainError);
  CHECK(Modulus::from_complement(0.6).k() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(Modulus::unit().k_prime() == 0.0);
}

TEST_CASE("agm") {
  CHECK(agm(1, 1).value == 1.0);
  CHECK(agm(1, 0).value == 0.0);
  CHECK(agm(1, 1 / std::sqrt(2.0)).iterations > 0);
  CHECK_THROWS_AS(agm(1, -1), DomainError);
  CHECK_THROWS_AS(agm(0.5, 1), DomainError);
}

TEST_CASE("K examples") {
  CHECK(ellip_k(mk(0)) == doctest::Approx(kPi / 2).epsilon(1e-16));
  const double g = ellint::gamma(0.25);
  CHECK(rel(ellip_k(mk(1 / std::sqrt(2.0))), g * g / (4 * std::sqrt(kPi))) <= 1e-13);
  CHECK(rel(ellip_k(mk(0.5)), kKHalf) <= 1e-13);
  const double quad = integrate_unit_singular(
                          [](double x) { return 1.0 / std::sqrt(1.0 - 0.25 * x * x); }, 1e-13)
                          .value;
  CHECK(rel(ellip_k(mk(0.5)), quad) <= 1e-11);
  CHECK_THROWS_AS(ellip_k(Modulus::unit()), DivergenceError);
  CHECK_THROWS_AS(ellip_k(mk(0.99999)), DivergenceError);
  CHECK(std::isfinite(ellip_k(mk(kModulusCap))));
}

TEST_CASE("E examples") {
  CHECK(ellip_e(mk(0)) == doctest::Approx(kPi / 2).epsilon(1e-16));
  CHECK(ellip_e(Modulus::unit()) == 1.0);
  CHECK(rel(ellip_e(mk(0.5)), kEHalf) <= 1e-13);
  const double quad = integrate_unit_singular(
                          [](double x) { return std::sqrt(1.0 - 0.25 * x * x); }, 1e-13)
                          .value;
  CHECK(rel(ellip_e(mk(0.5)), quad) <= 1e-11);
  CHECK(ellip_e(mk(0.99999)) > 1.0);
}

TEST_CASE("Pi") {
  for (double k : {0.0, 0.3, 0.8}) CHECK(rel(ellip_pi(0.0, mk(k)), ellip_k(mk(k))) <= 1e-12);
  for (double n : {-0.5, 0.3, 0.9}) {
    CHECK(rel(ellip_pi(n, mk(0)), kPi / (2 * std::sqrt(1 - n * n))) <= 1e-10);
  }
  CHECK(std::abs(ellip_pi(0.3, mk(0.5), 1e-10) - ellip_pi(0.3, mk(0.5), 1e-13)) <= 1e-10);
  CHECK_THROWS_AS(ellip_pi(1.0, mk(0.5)), DomainError);
}

TEST_CASE("complementary integrals") {
  const Modulus self = mk(1 / std::sqrt(2.0));
  CHECK(rel(comp_k(self), ellip_k(self)) <= 1e-14);
  CHECK(rel(comp_k(mk(0.8)), ellip_k(mk(0.6))) <= 1e-14);
  CHECK(rel(comp_e(mk(0.8)), ellip_e(mk(0.6))) <= 1e-14);
  CHECK_THROWS_AS(comp_k(mk(0)), DivergenceError);
}

TEST_CASE("Legendre relation, monotonicity, series routes") {
  double last_k = 0.0;
  double last_e = 2.0;
  for (int i = 1; i <= 19; ++i) {
    const double k = 0.05 * i;
    const Modulus mod = mk(k);
    CAPTURE(k);
    CHECK(std::abs(legendre_residual(mod)) <= 1e-12);
    const EllipticPair ke = ellip_ke(mod);
    CHECK(ke.K > last_k);
    CHECK(ke.E < last_e);
    CHECK(ke.K >= kPi / 2);
    CHECK(ke.E >= 1.0);
    last_k = ke.K;
    last_e = ke.E;
  }
  CHECK(std::abs(legendre_residual(mk(1 / std::sqrt(2.0)))) <= 1e-14);
  for (int i = 0; i <= 70; ++i) {
    const double m = i / 100.0;
    const Modulus mod = mk(std::sqrt(m));
    CAPTURE(m);
    CHECK(rel(ellip_k(mod), kPi / 2 * hyp2f1(0.5, 0.5, 1, m)) <= 1e-12);
    CHECK(rel(ellip_e(mod), kPi / 2 * hyp2f1(-0.5, 0.5, 1, m)) <= 1e-12);
  }
}

TEST_CASE("imaginary modulus") {
  CHECK(imag_modulus_k(0) == doctest::Approx(kPi / 2).epsilon(1e-14));
  const double g = ellint::gamma(0.25);
  CHECK(rel(imag_modulus_k(1), g * g / (4 * std::sqrt(2 * kPi))) <= 1e-11);
  for (double k : {0.3, 1.0, 2.0, 10.0}) {
    CHECK(rel(imag_modulus_k(k), imag_modulus_k_transform(k)) <= 1e-11);
  }
  CHECK_THROWS_AS(imag_modulus_k(-1), DomainError);
}

TEST_CASE("singular values") {
  CHECK(singular_modulus(1) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(singular_modulus(2) == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-15));
  CHECK(singular_modulus(4) == doctest::Approx(3 - 2 * std::sqrt(2.0)).epsilon(1e-15));
  for (int r = 1; r <= 5; ++r) {
    const Modulus mod = mk(singular_modulus(r));
    CHECK(std::abs(comp_k(mod) / ellip_k(mod) - std::sqrt(static_cast<double>(r))) <= 1e-10);
  }
  CHECK_THROWS_AS(singular_modulus(6), DomainError);
}

TEST_CASE("E(sqrt(-1))") {
  const double lhs =
      integrate_unit_singular([](double x) { return std::sqrt(1 + x * x); }, 1e-14).value;
  const double g1 = ellint::gamma(0.25);
  const double g3 = ellint::gamma(0.75);
  CHECK(std::abs(lhs - (g1 * g1 + 4 * g3 * g3) / (4 * std::sqrt(2 * kPi))) <= 1e-11);
}

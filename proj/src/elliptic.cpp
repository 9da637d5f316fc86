#include "ellint/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ellint/quad.hpp"

namespace ellint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAgmIterations = 64;

}  // namespace

Modulus Modulus::from_k(double k) {
  if (!(k >= 0.0) || !(k < 1.0)) {
    throw DomainError("Modulus: k must lie in [0, 1), got " + std::to_string(k));
  }
  return Modulus(k, k * k, std::sqrt((1.0 - k) * (1.0 + k)));
}

Modulus Modulus::from_complement(double k_prime) {
  if (!(k_prime > 0.0) || !(k_prime <= 1.0)) {
    throw DomainError("Modulus: k' must lie in (0, 1], got " + std::to_string(k_prime));
  }
  const double k = std::sqrt((1.0 - k_prime) * (1.0 + k_prime));
  return Modulus(k, (1.0 - k_prime) * (1.0 + k_prime), k_prime);
}

Modulus Modulus::unit() { return Modulus(1.0, 1.0, 0.0); }

Modulus Modulus::complement() const {
  if (k_ == 0.0 || k_prime_ == 0.0) {
    throw DivergenceError("Modulus: complement of k = 0 or k = 1 is degenerate");
  }
  return Modulus(k_prime_, k_prime_ * k_prime_, k_);
}

AgmResult agm(double a, double b) {
  if (!(b >= 0.0) || !(a >= b)) throw DomainError("agm: requires a >= b >= 0");
  if (b == 0.0) return {0.0, 0};
  int it = 0;
  while (a - b > 2.0 * kEps * a) {
    if (++it > kMaxAgmIterations) throw ConvergenceError("agm: no convergence");
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  return {0.5 * (a + b), it};
}

EllipticPair ellip_ke(const Modulus& mod) {
  if (mod.k() > kModulusCap) {
    throw DivergenceError("ellip_k: K diverges logarithmically as k -> 1 (k = " +
                          std::to_string(mod.k()) + ")");
  }
  // Gauss: E = K (1 - sum_{n>=0} 2^(n-1) c_n^2), c_0 = k, c_{n+1} = (a_n - b_n)/2.
  double a = 1.0;
  double b = mod.k_prime();
  double sum = 0.5 * mod.m();
  double scale = 0.5;
  for (int it = 0; a - b > 2.0 * kEps * a; ++it) {
    if (it > kMaxAgmIterations) throw ConvergenceError("ellip_ke: no convergence");
    const double c = 0.5 * (a - b);
    scale *= 2.0;
    sum += scale * c * c;
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  const double K = kPi / (a + b);
  return {K, K * (1.0 - sum)};
}

double ellip_k(const Modulus& mod) {
  if (mod.k_prime() == 0.0) throw DivergenceError("ellip_k: K(1) is infinite");
  if (mod.k() > kModulusCap) {
    throw DivergenceError("ellip_k: K diverges logarithmically as k -> 1 (k = " +
                          std::to_string(mod.k()) + ")");
  }
  return kPi / (2.0 * agm(1.0, mod.k_prime()).value);
}

double ellip_e(const Modulus& mod) {
  if (mod.k_prime() == 0.0) return 1.0;
  if (mod.k() > kModulusCap) {
    // Past the K cap the AGM product K (1 - sum) still behaves; evaluate the
    // trigonometric form directly instead.
    const double m = mod.m();
    return integrate_finite(
               [m](double t) {
                 const double s = std::sin(t);
                 return std::sqrt(1.0 - m * s * s);
               },
               0.0, kPi / 2, 1e-15)
        .value;
  }
  return ellip_ke(mod).E;
}

double ellip_pi(double n, const Modulus& mod, double tol) {
  if (!(n * n < 1.0)) throw DomainError("ellip_pi: requires n^2 < 1");
  if (mod.k_prime() == 0.0) throw DivergenceError("ellip_pi: infinite at k = 1");
  const double n2 = n * n;
  const double m = mod.m();
  return integrate_finite(
             [n2, m](double t) {
               const double s2 = std::sin(t) * std::sin(t);
               return 1.0 / ((1.0 - n2 * s2) * std::sqrt(1.0 - m * s2));
             },
             0.0, kPi / 2, tol)
      .value;
}

double comp_k(const Modulus& mod) {
  if (mod.k() == 0.0) throw DivergenceError("comp_k: K'(0) is infinite");
  if (mod.k_prime() == 0.0) throw DomainError("comp_k: requires k < 1");
  return ellip_k(mod.complement());
}

double comp_e(const Modulus& mod) {
  if (mod.k() == 0.0) return 1.0;
  if (mod.k_prime() == 0.0) throw DomainError("comp_e: requires k < 1");
  return ellip_e(mod.complement());
}

double legendre_residual(const Modulus& mod) {
  const EllipticPair direct = ellip_ke(mod);
  const EllipticPair comp = ellip_ke(mod.complement());
  return direct.K * comp.E + comp.K * direct.E - direct.K * comp.K - kPi / 2;
}

double imag_modulus_k(double k, double tol) {
  if (!(k >= 0.0)) throw DomainError("imag_modulus_k: requires k >= 0");
  const double k2 = k * k;
  return integrate_unit_singular([k2](double x) { return 1.0 / std::sqrt(1.0 + k2 * x * x); },
                                 tol)
      .value;
}

double imag_modulus_k_transform(double k) {
  if (!(k >= 0.0)) throw DomainError("imag_modulus_k_transform: requires k >= 0");
  const double r = std::hypot(1.0, k);
  return ellip_k(Modulus::from_complement(1.0 / r)) / r;
}

double singular_modulus(int r) {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  switch (r) {
    case 1:
      return 1.0 / s2;
    case 2:
      return s2 - 1.0;
    case 3:
      return s2 * (s3 - 1.0) / 4.0;
    case 4:
      return 3.0 - 2.0 * s2;
    case 5:
      return 0.5 * (std::sqrt(s5 - 1.0) - std::sqrt(3.0 - s5));
    default:
      throw DomainError("singular_modulus: only r = 1..5 are tabulated");
  }
}

}  // namespace ellint

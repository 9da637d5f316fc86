#pragma once

#include "ellint/errors.hpp"

namespace ellint {

/// Elliptic modulus k. All functions in this library take the modulus k,
/// never the parameter m = k^2; m and the complementary modulus k' are
/// derived on construction.
class Modulus {
 public:
  /// 0 <= k < 1.
  static Modulus from_k(double k);
  /// 0 < k' <= 1; computes k from k' without cancellation in k'.
  static Modulus from_complement(double k_prime);
  /// The degenerate endpoint k = 1, k' = 0 (only E is finite there).
  static Modulus unit();

  double k() const noexcept { return k_; }
  double m() const noexcept { return m_; }
  double k_prime() const noexcept { return k_prime_; }
  Modulus complement() const;

 private:
  Modulus(double k, double m, double k_prime) : k_(k), m_(m), k_prime_(k_prime) {}
  double k_;
  double m_;
  double k_prime_;
};

struct AgmResult {
  double value;
  int iterations;
};

/// Arithmetic-geometric mean of a >= b >= 0.
AgmResult agm(double a, double b);

/// Largest modulus for which K is evaluated; beyond it K signals divergence.
inline constexpr double kModulusCap = 0.9999;

/// K(k) = pi / (2 agm(1, k')). Throws DivergenceError for k > kModulusCap.
double ellip_k(const Modulus& mod);

/// E(k) by the AGM with the Gauss correction sum; E(1) = 1.
double ellip_e(const Modulus& mod);

/// Pi(n, k) = int_0^1 dx / ((1 - n^2 x^2) sqrt((1 - x^2)(1 - k^2 x^2))),
/// by quadrature of the trigonometric form. Requires n^2 < 1.
double ellip_pi(double n, const Modulus& mod, double tol = 1e-12);

struct EllipticPair {
  double K;
  double E;
};

EllipticPair ellip_ke(const Modulus& mod);

/// K'(k) = K(k'), k in (0, 1).
double comp_k(const Modulus& mod);
/// E'(k) = E(k'), k in (0, 1).
double comp_e(const Modulus& mod);

/// K E' + K' E - K K' - pi/2.
double legendre_residual(const Modulus& mod);

/// K(ik) as the real integral int_0^1 dx / sqrt((1 - x^2)(1 + k^2 x^2)).
double imag_modulus_k(double k, double tol = 1e-13);

/// K(ik) through (1 + k^2)^(-1/2) K(k / sqrt(1 + k^2)).
double imag_modulus_k_transform(double k);

/// Singular modulus k_r with K'/K(k_r) = sqrt(r), r = 1..5.
double singular_modulus(int r);

}  // namespace ellint

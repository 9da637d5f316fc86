#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ellint/errors.hpp"

namespace ellint {

using Integrand = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  long evaluations = 0;
};

/// Thrown when adaptive refinement is exhausted before the tolerance is met.
/// Carries the best estimate obtained.
class ToleranceNotMet : public ConvergenceError {
 public:
  ToleranceNotMet(const std::string& what, QuadResult best)
      : ConvergenceError(what), best_(best) {}
  const QuadResult& best() const noexcept { return best_; }

 private:
  QuadResult best_;
};

/// The cotangent-weighted integrand of the odd-kernel reduction is not bounded.
class UnboundedKernel : public DomainError {
 public:
  using DomainError::DomainError;
};

// Adaptive Gauss-Kronrod (10/21) with global bisection, depth <= 60. The
// target is |error| <= tol * max(1, |value|).
QuadResult integrate_finite(const Integrand& f, double a, double b, double tol);

// Integral over (0, 1) of g(x) / sqrt(1 - x^2), via x = sin t.
QuadResult integrate_unit_singular(const Integrand& g, double tol);

// Integral over (0, inf): split at 1, the tail mapped by x -> 1/x.
QuadResult integrate_semi_infinite(const Integrand& f, double tol);

enum class Parity { even, odd };

/// A periodic function with known parity. The constructor checks periodicity
/// and parity at 32 pseudo-random points (fixed seed) to 1e-12.
/// An antiperiodic kernel satisfies f(x + a) = -f(x) instead.
class PeriodicKernel {
 public:
  PeriodicKernel(Integrand f, double period, Parity parity, bool antiperiodic = false);

  double operator()(double x) const { return f_(x); }
  const Integrand& function() const noexcept { return f_; }
  double period() const noexcept { return period_; }
  Parity parity() const noexcept { return parity_; }
  bool antiperiodic() const noexcept { return antiperiodic_; }

 private:
  Integrand f_;
  double period_;
  Parity parity_;
  bool antiperiodic_;
};

/// For odd f of period a:
///   int_0^inf f(x)/x dx = (pi/a) int_0^{a/2} f(x) / tan(pi x / a) dx.
/// Throws UnboundedKernel when the right-hand integrand blows up at an end.
QuadResult reduce_odd_periodic(const PeriodicKernel& kernel, double tol = 1e-13);

/// int_0^inf f(x) sin(pi x / a) / x dx as a finite integral over (0, a/2):
/// (pi/a) int f for even periodic f, (pi/a) int f cos(pi x / a) for even
/// antiperiodic f. Odd kernels throw DomainError: for f = sin(2 pi x / a) the
/// integral is ln(3)/2, which no finite trigonometric integral of f reproduces.
QuadResult oscillatory_sinc(const PeriodicKernel& kernel, double tol = 1e-13);

/// Same for f of period a without a declared parity. The odd part of f must
/// vanish (checked at sample points).
QuadResult oscillatory_sinc(const Integrand& f, double a, double tol = 1e-13);

enum class Acceleration { none, pairwise_averaging, richardson };

/// Brute-force int_0^inf h(x)/x dx: sum of the integrals over `cells` cells
/// of length `cell`, accelerated. Pairwise averaging suits alternating cell
/// sums; Richardson extrapolation in 1/N suits monotone tails.
QuadResult cell_sum_direct(const Integrand& h, double cell, int cells,
                           Acceleration accel);

/// Brute-force int_0^inf f(x) sin(pi x / a) / x dx over `periods` cells of
/// length a. Independent of the reduction lemma.
QuadResult oscillatory_direct(const Integrand& f, double a, int periods,
                              Acceleration accel = Acceleration::pairwise_averaging);

/// PV int_0^inf tan(x) g(x) / x dx for g even and pi-periodic collapses to
/// int_0^{pi/2} g(x) dx.
QuadResult pv_tan_reduction(const Integrand& g, double tol = 1e-13);

/// Default exclusion radii for pv_direct: 1e-2 halved three times.
std::vector<double> default_pv_eps();

/// Principal value of int_0^inf f(x)/x dx where f has simple poles at
/// `pole_offsets` (in (0, a)) in every period cell. Each pole is excluded
/// symmetrically and its two sides are integrated together (x = p +- s), the
/// cell sum is extrapolated in 1/N and the result extrapolated in eps.
QuadResult pv_direct(const Integrand& f, std::span<const double> pole_offsets,
                     double a, int periods, std::span<const double> eps_sequence);

/// Polynomial extrapolation to h = 0 through the points (h_i, v_i) (Neville).
/// Returns the value and the last-correction error estimate.
QuadResult extrapolate_to_zero(std::span<const double> h, std::span<const double> v);

}  // namespace ellint

#include "ellint/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <random>
#include <string>

namespace ellint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxDepth = 60;
constexpr std::size_t kMaxSegments = 200000;

// Kronrod 21-point abscissae; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double abs_value;
  int depth;
};

struct ByError {
  bool operator()(const Segment& l, const Segment& r) const {
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  }
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw DomainError("integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

Segment gauss_kronrod(const Integrand& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  double abs_sum = std::abs(fc) * kWgk[10];
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked(f, center - dx);
    const double f2 = checked(f, center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half),
          abs_sum * std::abs(half), depth};
}

// Segments that can no longer be improved: too deep, too narrow, or already
// at the rounding floor.
bool is_final(const Segment& s) {
  if (s.depth >= kMaxDepth) return true;
  const double mid = 0.5 * (s.a + s.b);
  if (mid <= s.a || mid >= s.b) return true;
  return s.error <= 50.0 * kEps * s.abs_value;
}

double neumaier_sum(const std::vector<double>& xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

// Partial sums S[0..n] of the cell values.
std::vector<double> partial_sums(const std::vector<double>& cells) {
  std::vector<double> s(cells.size() + 1, 0.0);
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const double x = cells[i];
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
    s[i + 1] = sum + comp;
  }
  return s;
}

QuadResult accelerate(const std::vector<double>& cells, Acceleration accel) {
  const std::size_t n = cells.size();
  if (n < 32) throw DomainError("direct summation needs at least 32 cells");

  // The cell magnitudes must decay; a flat or growing sequence would be
  // regularized, not summed, by the accelerators.
  double late = 0.0;
  double mid = 0.0;
  const std::size_t w = n / 10;
  for (std::size_t i = 0; i < w; ++i) {
    late += std::abs(cells[n - 1 - i]);
    mid += std::abs(cells[n / 2 - 1 - i]);
  }
  if (mid > 1e-300 && late > 0.95 * mid) {
    throw ConvergenceError("cell integrals are not decaying");
  }

  const std::vector<double> s = partial_sums(cells);
  switch (accel) {
    case Acceleration::none:
      return {s[n], std::abs(cells[n - 1]), 0};
    case Acceleration::pairwise_averaging: {
      constexpr std::size_t kLevels = 24;
      std::vector<double> row(s.end() - static_cast<long>(kLevels + 1), s.end());
      std::vector<double> deltas;
      for (std::size_t level = 0; level < kLevels; ++level) {
        const double before = row.back();
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
          row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop_back();
        deltas.push_back(std::abs(row.back() - before));
      }
      const double last = deltas.back();
      const double floor = 64.0 * kEps * std::max(1.0, std::abs(row.back()));
      if (last > floor && last > 0.5 * deltas.front()) {
        throw ConvergenceError("pairwise averaging: corrections are not decreasing");
      }
      return {row.back(), std::max(last, floor), 0};
    }
    case Acceleration::richardson: {
      std::vector<double> h;
      std::vector<double> v;
      std::size_t m = n;
      while (h.size() < 5 && m >= 16) {
        h.push_back(1.0 / static_cast<double>(m));
        v.push_back(s[m]);
        m /= 2;
        if (m % 2 != n % 2) --m;
      }
      QuadResult r = extrapolate_to_zero(h, v);
      const double first = std::abs(v[0] - v[1]);
      const double floor = 64.0 * kEps * std::max(1.0, std::abs(r.value));
      if (r.error_estimate > floor && r.error_estimate > first) {
        throw ConvergenceError("Richardson extrapolation: corrections are not decreasing");
      }
      r.error_estimate = std::max(r.error_estimate, floor);
      return r;
    }
  }
  throw DomainError("unknown acceleration");
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, double tol) {
  if (!(a < b)) throw DomainError("integrate_finite: requires a < b");
  if (!(tol > 0.0)) throw DomainError("integrate_finite: requires tol > 0");

  std::priority_queue<Segment, std::vector<Segment>, ByError> open;
  std::vector<Segment> done;
  long evaluations = 21;
  const Segment first = gauss_kronrod(f, a, b, 0);
  double total = first.value;
  double total_error = first.error;
  double total_abs = first.abs_value;
  (is_final(first) ? done.push_back(first) : open.push(first));

  while (!open.empty() && total_error > tol * std::max(1.0, std::abs(total))) {
    if (open.size() + done.size() > kMaxSegments) break;
    const Segment s = open.top();
    open.pop();
    const double mid = 0.5 * (s.a + s.b);
    const Segment left = gauss_kronrod(f, s.a, mid, s.depth + 1);
    const Segment right = gauss_kronrod(f, mid, s.b, s.depth + 1);
    evaluations += 42;
    total += left.value + right.value - s.value;
    total_error += left.error + right.error - s.error;
    total_abs += left.abs_value + right.abs_value - s.abs_value;
    for (const Segment& c : {left, right}) {
      (is_final(c) ? done.push_back(c) : open.push(c));
    }
  }

  while (!open.empty()) {
    done.push_back(open.top());
    open.pop();
  }
  std::sort(done.begin(), done.end(),
            [](const Segment& l, const Segment& r) { return l.a < r.a; });
  std::vector<double> values;
  std::vector<double> errors;
  values.reserve(done.size());
  errors.reserve(done.size());
  for (const Segment& s : done) {
    values.push_back(s.value);
    errors.push_back(s.error);
  }
  QuadResult result{neumaier_sum(values), neumaier_sum(errors), evaluations};
  const double target = tol * std::max(1.0, std::abs(result.value));
  const double rounding = 1e3 * kEps * std::max(total_abs, std::abs(result.value));
  if (result.error_estimate > target && result.error_estimate > rounding) {
    throw ToleranceNotMet("integrate_finite: tolerance not met (error estimate " +
                              std::to_string(result.error_estimate) + ")",
                          result);
  }
  return result;
}

QuadResult integrate_unit_singular(const Integrand& g, double tol) {
  return integrate_finite([&g](double t) { return g(std::sin(t)); }, 0.0,
                          std::numbers::pi / 2, tol);
}

QuadResult integrate_semi_infinite(const Integrand& f, double tol) {
  const QuadResult head = integrate_finite(f, 0.0, 1.0, 0.5 * tol);
  const QuadResult tail = integrate_finite(
      [&f](double t) { return f(1.0 / t) / (t * t); }, 0.0, 1.0, 0.5 * tol);
  return {head.value + tail.value, head.error_estimate + tail.error_estimate,
          head.evaluations + tail.evaluations};
}

PeriodicKernel::PeriodicKernel(Integrand f, double period, Parity parity, bool antiperiodic)
    : f_(std::move(f)), period_(period), parity_(parity), antiperiodic_(antiperiodic) {
  if (!(period_ > 0.0)) throw DomainError("PeriodicKernel: period must be positive");
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(-period_, period_);
  const double sign = parity_ == Parity::even ? 1.0 : -1.0;
  for (int i = 0; i < 32; ++i) {
    const double x = dist(rng);
    const double fx = f_(x);
    const double scale = std::max(1.0, std::abs(fx));
    const double shifted = antiperiodic_ ? -f_(x + period_) : f_(x + period_);
    if (std::abs(shifted - fx) > 1e-12 * scale) {
      throw DomainError("PeriodicKernel: function is not periodic with the given period");
    }
    if (std::abs(f_(-x) - sign * fx) > 1e-12 * scale) {
      throw DomainError("PeriodicKernel: function does not have the declared parity");
    }
  }
}

QuadResult reduce_odd_periodic(const PeriodicKernel& kernel, double tol) {
  if (kernel.parity() != Parity::odd) {
    throw DomainError("reduce_odd_periodic: kernel must be odd");
  }
  const double a = kernel.period();
  const double w = std::numbers::pi / a;
  const Integrand weighted = [&kernel, w](double x) {
    return kernel(x) * std::cos(w * x) / std::sin(w * x);
  };
  // Probe both ends: the weighted integrand must stay bounded.
  const double half = 0.5 * a;
  const double near0 = std::abs(weighted(half * 1e-4));
  const double at0 = std::abs(weighted(half * 1e-10));
  const double near_end = std::abs(weighted(half * (1.0 - 1e-4)));
  const double at_end = std::abs(weighted(half * (1.0 - 1e-10)));
  if (!std::isfinite(at0) || at0 > 1e3 * (1.0 + near0) || !std::isfinite(at_end) ||
      at_end > 1e3 * (1.0 + near_end)) {
    throw UnboundedKernel(
        "reduce_odd_periodic: cotangent-weighted integrand is unbounded; use the "
        "principal-value route");
  }
  QuadResult r = integrate_finite(weighted, 0.0, half, tol);
  r.value *= w;
  r.error_estimate *= w;
  r.evaluations += 4;
  return r;
}

QuadResult oscillatory_sinc(const PeriodicKernel& kernel, double tol) {
  if (kernel.parity() != Parity::even) {
    throw DomainError("oscillatory_sinc: odd kernels have no finite-interval reduction");
  }
  const double a = kernel.period();
  const double w = std::numbers::pi / a;
  QuadResult r;
  if (!kernel.antiperiodic()) {
    r = integrate_finite(kernel.function(), 0.0, 0.5 * a, tol);
  } else {
    r = integrate_finite([&kernel, w](double x) { return kernel(x) * std::cos(w * x); },
                         0.0, 0.5 * a, tol);
  }
  r.value *= w;
  r.error_estimate *= w;
  return r;
}

QuadResult oscillatory_sinc(const Integrand& f, double a, double tol) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(-a, a);
  for (int i = 0; i < 32; ++i) {
    const double x = dist(rng);
    const double odd = 0.5 * (f(x) - f(-x));
    if (std::abs(odd) > 1e-12 * std::max(1.0, std::abs(f(x)))) {
      throw DomainError("oscillatory_sinc: kernel has a nonzero odd part");
    }
  }
  return oscillatory_sinc(PeriodicKernel(f, a, Parity::even), tol);
}

QuadResult cell_sum_direct(const Integrand& h, double cell, int cells,
                           Acceleration accel) {
  if (!(cell > 0.0)) throw DomainError("cell_sum_direct: cell length must be positive");
  if (cells < 32) throw DomainError("cell_sum_direct: needs at least 32 cells");
  const Integrand g = [&h](double x) { return h(x) / x; };
  std::vector<double> values(static_cast<std::size_t>(cells));
  long evaluations = 0;
  double quad_error = 0.0;
  for (int n = 0; n < cells; ++n) {
    const QuadResult r = integrate_finite(g, n * cell, (n + 1) * cell, 1e-14);
    values[static_cast<std::size_t>(n)] = r.value;
    evaluations += r.evaluations;
    quad_error += r.error_estimate;
  }
  QuadResult result = accelerate(values, accel);
  result.evaluations = evaluations;
  result.error_estimate += quad_error;
  return result;
}

QuadResult oscillatory_direct(const Integrand& f, double a, int periods,
                              Acceleration accel) {
  const double w = std::numbers::pi / a;
  return cell_sum_direct([&f, w](double x) { return f(x) * std::sin(w * x); }, a,
                         periods, accel);
}

QuadResult pv_tan_reduction(const Integrand& g, double tol) {
  return integrate_finite(g, 0.0, std::numbers::pi / 2, tol);
}

std::vector<double> default_pv_eps() { return {1e-2, 5e-3, 2.5e-3, 1.25e-3}; }

namespace {

double neville_at_zero(std::vector<double> h, std::vector<double> p) {
  const std::size_t n = p.size();
  // After pass k, p[i] interpolates the points i..i+k.
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      p[i] = (h[i + k] * p[i] - h[i] * p[i + 1]) / (h[i + k] - h[i]);
    }
  }
  return p[0];
}

}  // namespace

QuadResult extrapolate_to_zero(std::span<const double> h, std::span<const double> v) {
  if (h.size() != v.size() || h.empty()) {
    throw DomainError("extrapolate_to_zero: need matching, non-empty inputs");
  }
  std::vector<double> hs(h.begin(), h.end());
  std::vector<double> vs(v.begin(), v.end());
  const double full = neville_at_zero(hs, vs);
  if (hs.size() == 1) return {full, 0.0, 0};
  // Error estimate: drop the coarsest point and compare.
  const auto coarsest = std::max_element(hs.begin(), hs.end(), [](double l, double r) {
                          return std::abs(l) < std::abs(r);
                        }) - hs.begin();
  hs.erase(hs.begin() + coarsest);
  vs.erase(vs.begin() + coarsest);
  const double lower = neville_at_zero(hs, vs);
  return {full, std::abs(full - lower), 0};
}

QuadResult pv_direct(const Integrand& f, std::span<const double> pole_offsets, double a,
                     int periods, std::span<const double> eps_sequence) {
  if (!(a > 0.0)) throw DomainError("pv_direct: period must be positive");
  if (pole_offsets.empty()) throw DomainError("pv_direct: no poles given");
  if (eps_sequence.size() < 2) throw DomainError("pv_direct: need at least two eps values");
  std::vector<double> poles(pole_offsets.begin(), pole_offsets.end());
  std::sort(poles.begin(), poles.end());
  if (poles.front() <= 0.0 || poles.back() >= a) {
    throw DomainError("pv_direct: pole offsets must lie inside (0, a)");
  }

  // Symmetric window [p - delta, p + delta] around each pole, bounded by the
  // midpoints to its neighbours (or the cell edges).
  const std::size_t np = poles.size();
  std::vector<double> delta(np);
  std::vector<std::pair<double, double>> regular;
  double cursor = 0.0;
  for (std::size_t i = 0; i < np; ++i) {
    const double lo = i == 0 ? 0.0 : 0.5 * (poles[i - 1] + poles[i]);
    const double hi = i + 1 == np ? a : 0.5 * (poles[i] + poles[i + 1]);
    delta[i] = std::min(poles[i] - lo, hi - poles[i]);
    if (poles[i] - delta[i] > cursor) regular.emplace_back(cursor, poles[i] - delta[i]);
    cursor = poles[i] + delta[i];
  }
  if (cursor < a) regular.emplace_back(cursor, a);
  const double min_delta = *std::min_element(delta.begin(), delta.end());
  for (double eps : eps_sequence) {
    if (!(eps > 0.0) || eps >= min_delta) {
      throw DomainError("pv_direct: eps must lie in (0, pole window)");
    }
  }

  const Integrand over_x = [&f](double x) { return f(x) / x; };
  const auto n_cells = static_cast<std::size_t>(periods);
  long evaluations = 0;
  double quad_error = 0.0;

  std::vector<double> regular_cells(n_cells, 0.0);
  for (std::size_t n = 0; n < n_cells; ++n) {
    const double x0 = static_cast<double>(n) * a;
    for (const auto& [lo, hi] : regular) {
      const QuadResult r = integrate_finite(over_x, x0 + lo, x0 + hi, 1e-13);
      regular_cells[n] += r.value;
      evaluations += r.evaluations;
      quad_error += r.error_estimate;
    }
  }

  std::vector<double> eps_values;
  std::vector<double> eps_h;
  double sum_error = 0.0;
  for (double eps : eps_sequence) {
    std::vector<double> cells = regular_cells;
    for (std::size_t n = 0; n < n_cells; ++n) {
      const double x0 = static_cast<double>(n) * a;
      for (std::size_t i = 0; i < np; ++i) {
        const double p = x0 + poles[i];
        const Integrand paired = [&over_x, p](double s) {
          return over_x(p + s) + over_x(p - s);
        };
        const QuadResult r = integrate_finite(paired, eps, delta[i], 1e-13);
        cells[n] += r.value;
        evaluations += r.evaluations;
        quad_error += r.error_estimate;
      }
    }
    const QuadResult summed = accelerate(cells, Acceleration::richardson);
    sum_error = std::max(sum_error, summed.error_estimate);
    eps_values.push_back(summed.value);
    eps_h.push_back(eps);
  }
  QuadResult result = extrapolate_to_zero(eps_h, eps_values);
  result.error_estimate += sum_error + quad_error / static_cast<double>(eps_sequence.size());
  result.evaluations = evaluations;
  return result;
}

}  // namespace ellint

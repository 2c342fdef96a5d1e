#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdyck/bitstream.hpp"

namespace mdyck {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// sqrt(2 e^{1 - gamma} / pi).
double limit_amplitude();

/// n-th cumulant of the limit variable X, 1 / (2 n (n + 1)).
Rational cumulant(int n);

/// Taylor coefficients c_1..c_count of K(z) = int_0^z (e^y - 1 - y) / (2 y^2) dy,
/// obtained numerically: K is evaluated on a circle by Gauss-Legendre
/// quadrature and the coefficients are read off a discrete Cauchy integral.
std::vector<double> cgf_taylor_coefficients(int count);

/// F(x) = A sin(sqrt(2x)) on [0, 1]; throws std::domain_error elsewhere.
double F_closed_form(double x);
/// F'(x) on (0, 1].
double F_closed_form_slope(double x);

/// Values and slopes of a solution of y + y' + 2x y'' = forcing(x) on the
/// mesh x0, x0 + dx, ..., x0 + steps * dx.
struct OdeTrace {
  std::vector<double> value;
  std::vector<double> slope;
  /// Step-doubling estimate of the local error of the first step.
  double first_step_error = 0.0;
};

/// Fixed-step classical Runge-Kutta on the first-order system (y, y').
/// Requires x0 > 0.
OdeTrace march_delay_interval(double x0, std::int64_t steps, double dx, double value0,
                              double slope0, const std::function<double(double)>& forcing);

/// Piecewise representation of a distribution function on a uniform mesh
/// over [0, x_max]. The tail 1 - F and its slope are stored per mesh point
/// and evaluated between mesh points by cubic Hermite interpolation; when
/// built by solve_F the exact closed form is used on [0, 1].
class DistributionTable {
 public:
  DistributionTable(double dx, std::vector<double> tail, std::vector<double> tail_slope,
                    bool closed_form_on_unit);

  double dx() const noexcept { return dx_; }
  double x_max() const noexcept { return dx_ * static_cast<double>(tail_.size() - 1); }
  std::size_t size() const noexcept { return tail_.size(); }
  bool closed_form_on_unit() const noexcept { return closed_form_on_unit_; }

  /// 1 - F(x); 1 below zero and 0 beyond x_max.
  double tail(double x) const;
  double cdf(double x) const { return 1.0 - tail(x); }
  /// F'(x).
  double density(double x) const;

  double tail_at(std::size_t k) const { return tail_[k]; }
  double tail_slope_at(std::size_t k) const { return tail_slope_[k]; }
  double mesh(std::size_t k) const { return dx_ * static_cast<double>(k); }

 private:
  double dx_;
  std::vector<double> tail_;
  std::vector<double> tail_slope_;
  bool closed_form_on_unit_;
};

struct SolveOptions {
  /// Bound on the step-doubling local error estimate at each integer point.
  double tolerance = 1e-9;
};

/// Distribution function of X: closed form on [0, 1], then interval by
/// interval the delay equation F + F' + 2x F'' = F(x - 1), with initial
/// conditions from continuity of F and F' at each integer. Integrated for
/// the tail 1 - F, which obeys the same equation. Requires x_max >= 1,
/// dx <= 1e-3 and 1 / dx integral.
DistributionTable solve_F(double x_max = 8.0, double dx = 1e-4, const SolveOptions& options = {});

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance from integrals of the tail; mass beyond x_max is
/// bounded by exponential extrapolation of the log-tail.
Moments table_moments(const DistributionTable& table);

/// Distribution of 1 + X + U with U uniform on [0, 1]:
/// G(y) = int_{y-2}^{y-1} F(t) dt, tabulated on [0, x_max + 2].
DistributionTable limit_M_over_n_distribution(const DistributionTable& table);

struct TailDecayPoint {
  double x = 0.0;
  double tail = 0.0;
  /// d/dx log(1 - F(x)).
  double log_slope = 0.0;
  /// log(1 - F(x)) / (x log x).
  double ratio = 0.0;
};

struct TailDecayReport {
  bool passed = false;
  std::vector<TailDecayPoint> points;
};

inline constexpr double kReliableTail = 1e-12;

/// Qualitative super-exponential decay of 1 - F, sampled on [2, x_max] in
/// steps of 1/2 while the tail exceeds kReliableTail. Passes when the tail
/// strictly decreases, the log-tail slope is negative and strictly
/// steepening, and log(1 - F(x)) / (x log x) <= -0.5 at the last point.
/// Requires x_max >= 4.
TailDecayReport tail_decay_check(const DistributionTable& table);

/// Points of the Poisson process with density 1 / (2x) on (eps, 1], and the
/// sum of one Unif[0, x] mark per point.
struct PoissonProcessSample {
  std::vector<double> points;
  double x_value = 0.0;
};

/// Requires 0 < eps < 1. The point count is Poisson with mean ln(1 / eps) / 2
/// and each point is eps^V with V uniform.
PoissonProcessSample sample_poisson_process(CountedBitSource& src, double eps = 1e-9);

/// One draw of X, truncated to the points in (eps, 1]; the omitted points
/// contribute at most eps / 2 in expectation.
double simulate_X(CountedBitSource& src, double eps = 1e-9);

}  // namespace mdyck

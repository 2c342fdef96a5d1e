#include "mdyck/limit_law.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mdyck {

namespace {

struct Hermite {
  double value;
  double slope;
};

// Cubic Hermite interpolation on the cell of a uniform mesh containing x.
Hermite hermite(const std::vector<double>& value, const std::vector<double>& slope, double dx,
                double x) {
  const auto last = value.size() - 1;
  auto k = static_cast<std::size_t>(x / dx);
  if (k >= last) k = last - 1;
  const double t = x / dx - static_cast<double>(k);
  const double y0 = value[k], y1 = value[k + 1];
  const double m0 = slope[k], m1 = slope[k + 1];
  const double t2 = t * t, t3 = t2 * t;
  const double v = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * dx * m0 +
                   (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * dx * m1;
  const double d = ((6 * t2 - 6 * t) * y0 + (-6 * t2 + 6 * t) * y1) / dx +
                   (3 * t2 - 4 * t + 1) * m0 + (3 * t2 - 2 * t) * m1;
  return {v, d};
}

std::int64_t steps_per_unit(double dx) {
  const double spu = std::round(1.0 / dx);
  if (spu < 1 || std::abs(spu * dx - 1.0) > 1e-9) throw std::invalid_argument("1 / dx must be an integer");
  return static_cast<std::int64_t>(spu);
}

// int_0^x F_closed_form(t) dt for x in [0, 1].
double closed_form_integral(double x) {
  const double s = std::sqrt(2.0 * x);
  return limit_amplitude() * (std::sin(s) - s * std::cos(s));
}

// Corrected trapezoid on [a, a + h] from endpoint values and slopes.
double cell_integral(double h, double y0, double d0, double y1, double d1) {
  return 0.5 * h * (y0 + y1) + h * h / 12.0 * (d0 - d1);
}

// (e^w - 1 - w) / w^2, entire.
std::complex<double> phi2(std::complex<double> w) {
  if (std::abs(w) < 1.0) {
    std::complex<double> term = 0.5;
    std::complex<double> sum = term;
    for (int k = 1; k < 30; ++k) {
      term *= w / static_cast<double>(k + 2);
      sum += term;
    }
    return sum;
  }
  return (std::exp(w) - 1.0 - w) / (w * w);
}

std::vector<std::pair<double, double>> gauss_legendre_unit(int count) {
  std::vector<std::pair<double, double>> rule;
  for (int i = 1; i <= count; ++i) {
    double x = std::cos(std::numbers::pi * (i - 0.25) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Map [-1, 1] to [0, 1].
    rule.emplace_back(0.5 * (x + 1.0), 1.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace

double limit_amplitude() {
  static const double a = std::sqrt(2.0 * std::exp(1.0 - kEulerGamma) / std::numbers::pi);
  return a;
}

Rational cumulant(int n) {
  if (n < 1) throw std::invalid_argument("cumulant order must be at least 1");
  return Rational(1, 2 * static_cast<std::int64_t>(n) * (n + 1));
}

std::vector<double> cgf_taylor_coefficients(int count) {
  if (count < 1 || count > 30) throw std::invalid_argument("coefficient count must lie in [1, 30]");
  constexpr int kNodes = 128;
  constexpr double kRadius = 4.0;
  const auto rule = gauss_legendre_unit(48);
  // K(z) = (z / 2) int_0^1 phi2(t z) dt.
  auto cgf = [&rule](std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (const auto& [t, w] : rule) acc += w * phi2(t * z);
    return 0.5 * z * acc;
  };
  std::vector<std::complex<double>> samples(kNodes);
  for (int j = 0; j < kNodes; ++j)
    samples[j] = cgf(std::polar(kRadius, 2.0 * std::numbers::pi * j / kNodes));
  std::vector<double> coeffs;
  for (int n = 1; n <= count; ++n) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < kNodes; ++j)
      acc += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * j * n / kNodes);
    coeffs.push_back(acc.real() / kNodes / std::pow(kRadius, n));
  }
  return coeffs;
}

double F_closed_form(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("closed form holds on [0, 1] only");
  return limit_amplitude() * std::sin(std::sqrt(2.0 * x));
}

double F_closed_form_slope(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw std::domain_error("closed form slope holds on (0, 1] only");
  const double s = std::sqrt(2.0 * x);
  return limit_amplitude() * std::cos(s) / s;
}

OdeTrace march_delay_interval(double x0, std::int64_t steps, double dx, double value0,
                              double slope0, const std::function<double(double)>& forcing) {
  if (!(x0 > 0.0)) throw std::invalid_argument("the equation is singular at x = 0");
  // y'' = (g(x) - y - y') / (2x)
  auto accel = [&forcing](double x, double y, double dy) {
    return (forcing(x) - y - dy) / (2.0 * x);
  };
  auto rk4 = [&accel](double x, double h, double& y, double& dy) {
    const double k1y = dy, k1d = accel(x, y, dy);
    const double k2y = dy + 0.5 * h * k1d, k2d = accel(x + 0.5 * h, y + 0.5 * h * k1y, k2y);
    const double k3y = dy + 0.5 * h * k2d, k3d = accel(x + 0.5 * h, y + 0.5 * h * k2y, k3y);
    const double k4y = dy + h * k3d, k4d = accel(x + h, y + h * k3y, k4y);
    y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    dy += h / 6.0 * (k1d + 2 * k2d + 2 * k3d + k4d);
  };
  // The forcing F(x - 1) carries a sqrt(x - x0) term at the start of [1, 2],
  // which drops a uniform mesh to order 1.5. Cell 0 is therefore crossed on a
  // geometric grid accumulating at x0 and the next cells are subdivided.
  auto cell = [&](std::int64_t k, double& y, double& dy, int refine) {
    const double a = x0 + static_cast<double>(k) * dx;
    if (k == 0) {
      const double ratio = std::pow(0.99, 1.0 / refine);
      const auto grades = static_cast<int>(std::ceil(std::log(1e-12) / std::log(ratio)));
      double left = a;
      for (int i = grades; i >= 0; --i) {
        const double right = a + dx * std::pow(ratio, i);
        rk4(left, right - left, y, dy);
        left = right;
      }
      return;
    }
    const auto sub = refine * std::max<std::int64_t>(
                                  1, static_cast<std::int64_t>(std::ceil(
                                         100.0 * std::pow(static_cast<double>(k), -0.875))));
    const double h = dx / static_cast<double>(sub);
    for (std::int64_t j = 0; j < sub; ++j) rk4(a + static_cast<double>(j) * h, h, y, dy);
  };

  OdeTrace trace;
  trace.value.reserve(static_cast<std::size_t>(steps + 1));
  trace.slope.reserve(static_cast<std::size_t>(steps + 1));
  trace.value.push_back(value0);
  trace.slope.push_back(slope0);
  if (steps > 0) {
    double y_once = value0, d_once = slope0, y_twice = value0, d_twice = slope0;
    cell(0, y_once, d_once, 1);
    cell(0, y_twice, d_twice, 2);
    trace.first_step_error = std::max(std::abs(y_once - y_twice), std::abs(d_once - d_twice) * dx);
  }
  double y = value0, dy = slope0;
  for (std::int64_t k = 0; k < steps; ++k) {
    cell(k, y, dy, 1);
    trace.value.push_back(y);
    trace.slope.push_back(dy);
  }
  return trace;
}

DistributionTable::DistributionTable(double dx, std::vector<double> tail,
                                     std::vector<double> tail_slope, bool closed_form_on_unit)
    : dx_(dx), tail_(std::move(tail)), tail_slope_(std::move(tail_slope)),
      closed_form_on_unit_(closed_form_on_unit) {
  if (tail_.size() < 2 || tail_.size() != tail_slope_.size())
    throw std::invalid_argument("distribution table needs matching tails of at least two points");
}

double DistributionTable::tail(double x) const {
  if (x <= 0.0) return 1.0;
  if (x > x_max()) return 0.0;
  if (closed_form_on_unit_ && x <= 1.0) return 1.0 - F_closed_form(x);
  return hermite(tail_, tail_slope_, dx_, x).value;
}

double DistributionTable::density(double x) const {
  if (x <= 0.0 || x > x_max()) return 0.0;
  if (closed_form_on_unit_ && x <= 1.0) return F_closed_form_slope(x);
  return -hermite(tail_, tail_slope_, dx_, x).slope;
}

DistributionTable solve_F(double x_max, double dx, const SolveOptions& options) {
  if (!(x_max >= 1.0)) throw std::invalid_argument("solve_F requires x_max >= 1");
  if (!(dx > 0.0 && dx <= 1e-3)) throw std::invalid_argument("solve_F requires 0 < dx <= 1e-3");
  const std::int64_t spu = steps_per_unit(dx);
  const auto total = static_cast<std::int64_t>(std::llround(x_max / dx));

  std::vector<double> tail{1.0};
  std::vector<double> slope{-std::numeric_limits<double>::infinity()};
  tail.reserve(static_cast<std::size_t>(total + 1));
  slope.reserve(static_cast<std::size_t>(total + 1));
  for (std::int64_t k = 1; k <= std::min(spu, total); ++k) {
    const double x = static_cast<double>(k) * dx;
    tail.push_back(1.0 - F_closed_form(x));
    slope.push_back(-F_closed_form_slope(x));
  }

  // Tail on [0, x0] for the delay term; the partially filled vectors cover
  // everything the current interval reads.
  auto known_tail = [&](double x) {
    if (x <= 0.0) return 1.0;
    if (x <= 1.0) return 1.0 - F_closed_form(x);
    return hermite(tail, slope, dx, x).value;
  };

  for (std::int64_t start = spu; start < total; start += spu) {
    const std::int64_t steps = std::min(spu, total - start);
    const double x0 = static_cast<double>(start) * dx;
    const auto k0 = static_cast<std::size_t>(start);
    auto trace = march_delay_interval(x0, steps, dx, tail[k0], slope[k0],
                                      [&](double x) { return known_tail(x - 1.0); });
    if (trace.first_step_error > options.tolerance)
      throw std::runtime_error("solve_F: local error estimate " +
                               std::to_string(trace.first_step_error) + " at x = " +
                               std::to_string(x0) + " exceeds tolerance; reduce dx");
    tail.insert(tail.end(), trace.value.begin() + 1, trace.value.end());
    slope.insert(slope.end(), trace.slope.begin() + 1, trace.slope.end());
  }
  return DistributionTable(dx, std::move(tail), std::move(slope), true);
}

Moments table_moments(const DistributionTable& table) {
  const double dx = table.dx();
  std::size_t k = 0;
  double first = 0.0;   // int tail
  double second = 0.0;  // int 2x tail
  if (table.closed_form_on_unit()) {
    const double a = limit_amplitude();
    const double s = std::numbers::sqrt2;
    first = 1.0 - a * (std::sin(s) - s * std::cos(s));
    const double s3 = -s * s * s * std::cos(s) + 3 * s * s * std::sin(s) + 6 * s * std::cos(s) -
                      6 * std::sin(s);
    second = 1.0 - a * s3;
    k = static_cast<std::size_t>(steps_per_unit(dx));
  }
  for (; k + 1 < table.size(); ++k) {
    const double x0 = table.mesh(k), x1 = table.mesh(k + 1);
    const double t0 = table.tail_at(k), t1 = table.tail_at(k + 1);
    const double d0 = table.tail_slope_at(k), d1 = table.tail_slope_at(k + 1);
    first += cell_integral(dx, t0, d0, t1, d1);
    second += cell_integral(dx, 2 * x0 * t0, 2 * t0 + 2 * x0 * d0, 2 * x1 * t1, 2 * t1 + 2 * x1 * d1);
  }
  // Beyond x_max the log-tail is concave, so an exponential with the final
  // decay rate bounds the remaining mass from above.
  const double t_end = table.tail_at(table.size() - 1);
  const double rate = -table.tail_slope_at(table.size() - 1) / t_end;
  if (t_end > 0.0 && rate > 0.0) {
    const double xm = table.x_max();
    first += t_end / rate;
    second += 2.0 * t_end * (xm / rate + 1.0 / (rate * rate));
  }
  return {first, second - first * first};
}

DistributionTable limit_M_over_n_distribution(const DistributionTable& table) {
  const double dx = table.dx();
  const std::int64_t spu = steps_per_unit(dx);
  const auto last = static_cast<std::int64_t>(table.size()) - 1;

  // integral[k] = int_0^{x_k} F.
  std::vector<double> integral(table.size(), 0.0);
  for (std::int64_t k = 1; k <= last; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (table.closed_form_on_unit() && k <= spu) {
      integral[i] = closed_form_integral(table.mesh(i));
    } else {
      integral[i] = integral[i - 1] + cell_integral(dx, 1.0 - table.tail_at(i - 1),
                                                    -table.tail_slope_at(i - 1),
                                                    1.0 - table.tail_at(i), -table.tail_slope_at(i));
    }
  }
  auto cumulative = [&](std::int64_t k) {
    if (k <= 0) return 0.0;
    if (k > last) return integral.back() + static_cast<double>(k - last) * dx;
    return integral[static_cast<std::size_t>(k)];
  };

  const std::int64_t total = last + 2 * spu;
  std::vector<double> tail(static_cast<std::size_t>(total + 1));
  std::vector<double> slope(static_cast<std::size_t>(total + 1));
  for (std::int64_t k = 0; k <= total; ++k) {
    const double y = static_cast<double>(k) * dx;
    const double g = cumulative(k - spu) - cumulative(k - 2 * spu);
    const double dg = table.cdf(y - 1.0) - table.cdf(y - 2.0);
    tail[static_cast<std::size_t>(k)] = 1.0 - g;
    slope[static_cast<std::size_t>(k)] = -dg;
  }
  return DistributionTable(dx, std::move(tail), std::move(slope), false);
}

TailDecayReport tail_decay_check(const DistributionTable& table) {
  if (table.x_max() < 4.0) throw std::invalid_argument("tail_decay_check requires x_max >= 4");
  TailDecayReport report;
  for (double x = 2.0; x <= table.x_max() + 1e-12; x += 0.5) {
    const double t = table.tail(x);
    if (!(t > kReliableTail)) break;
    report.points.push_back({x, t, -table.density(x) / t, std::log(t) / (x * std::log(x))});
  }
  const auto& pts = report.points;
  bool ok = pts.size() >= 3;
  for (std::size_t i = 0; ok && i < pts.size(); ++i) {
    ok = pts[i].log_slope < 0.0;
    if (ok && i > 0) ok = pts[i].tail < pts[i - 1].tail && pts[i].log_slope < pts[i - 1].log_slope;
  }
  report.passed = ok && pts.back().ratio <= -0.5;
  return report;
}

namespace {

template <class Visit>
void poisson_marks(CountedBitSource& src, double eps, Visit&& visit) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("Poisson truncation requires 0 < eps < 1");
  const double log_eps = std::log(eps);
  std::poisson_distribution<long> count(-0.5 * log_eps);
  const long points = count(src);
  for (long i = 0; i < points; ++i) {
    const double x = std::exp(log_eps * src.uniform01());
    visit(x, x * src.uniform01());
  }
}

}  // namespace

PoissonProcessSample sample_poisson_process(CountedBitSource& src, double eps) {
  PoissonProcessSample s;
  poisson_marks(src, eps, [&s](double x, double mark) {
    s.points.push_back(x);
    s.x_value += mark;
  });
  return s;
}

double simulate_X(CountedBitSource& src, double eps) {
  double x_value = 0.0;
  poisson_marks(src, eps, [&x_value](double, double mark) { x_value += mark; });
  return x_value;
}

}  // namespace mdyck

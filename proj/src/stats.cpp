#include "mdyck/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace mdyck {

double chi_square_statistic(std::span<const std::uint64_t> observed,
                            std::span<const double> expected) {
  if (observed.size() != expected.size())
    throw std::invalid_argument("observed and expected sizes differ");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double diff = static_cast<double>(observed[i]) - expected[i];
    stat += diff * diff / expected[i];
  }
  return stat;
}

double chi_square_p_value(double statistic, double degrees_of_freedom) {
  const boost::math::chi_squared dist(degrees_of_freedom);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

double ks_distance(std::vector<double>& sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_distance on an empty sample");
  std::sort(sample.begin(), sample.end());
  const auto n = static_cast<double>(sample.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    sup = std::max({sup, std::abs(static_cast<double>(i + 1) / n - f),
                    std::abs(f - static_cast<double>(i) / n)});
  }
  return sup;
}

}  // namespace mdyck

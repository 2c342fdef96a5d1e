#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mdyck {

/// Single-pass mean and variance (Welford), mergeable across partitions.
class RunningStats {
 public:
  void add(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  void merge(const RunningStats& other) noexcept {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(count_ + other.count_);
    const double delta = other.mean_ - mean_;
    mean_ += delta * static_cast<double>(other.count_) / total;
    m2_ += other.m2_ + delta * delta * static_cast<double>(count_) *
                           static_cast<double>(other.count_) / total;
    count_ += other.count_;
  }

  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased sample variance; zero for fewer than two samples.
  double variance() const noexcept {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Pearson statistic of observed counts against expected counts.
double chi_square_statistic(std::span<const std::uint64_t> observed,
                            std::span<const double> expected);

/// Upper tail probability of the chi-square distribution.
double chi_square_p_value(double statistic, double degrees_of_freedom);

/// sup |ECDF - cdf| over a sample; `sample` is sorted in place.
double ks_distance(std::vector<double>& sample, const std::function<double(double)>& cdf);

}  // namespace mdyck

#pragma once

#include <cstdint>
#include <vector>

#include "mdyck/bitstream.hpp"
#include "mdyck/path.hpp"
#include "mdyck/stats.hpp"

namespace mdyck {

struct UnfoldEvent {
  std::int64_t iteration = 0;
  std::int64_t point = 0;

  friend bool operator==(const UnfoldEvent&, const UnfoldEvent&) = default;
};

struct SampleReport {
  Path path;
  std::uint64_t bits_consumed = 0;
  std::uint64_t memory_accesses = 0;
  std::vector<UnfoldEvent> unfold_events;
  std::int64_t height_final = 0;
  /// Height of the m-Dyck prefix right before the final fold.
  std::int64_t prefix_height = 0;
};

/// Uniform m-Lukasiewicz sampling with anticipated unfolding.
///
/// Each iteration appends a random step; whenever the height drops below
/// zero the path is an m-Lukasiewicz path, which is pointed uniformly and
/// unfolded in place. After the last iteration a uniform decoration is drawn
/// and the prefix is folded.
///
/// Memory accesses: one per appended step, one per cell touched by each
/// unfold and by the final fold. Bits: everything drawn from the source
/// between construction and finish().
class LukaSampler {
 public:
  LukaSampler(std::int64_t m, std::int64_t n, CountedBitSource& src, int grouping = 1);

  /// Runs one loop iteration.
  void step();
  /// Runs the remaining iterations, decorates and folds.
  SampleReport finish();

  std::int64_t iteration() const noexcept { return path_.size(); }
  std::int64_t length() const noexcept { return n_; }
  const Path& path() const noexcept { return path_; }
  std::uint64_t memory_accesses() const noexcept { return meter_.count; }
  const std::vector<UnfoldEvent>& unfold_events() const noexcept { return events_; }

  void record_events(bool on) noexcept { record_events_ = on; }

 private:
  std::int64_t n_;
  CountedBitSource* src_;
  BernoulliGen gen_;
  Path path_;
  AccessMeter meter_;
  std::vector<UnfoldEvent> events_;
  std::uint64_t bits_at_start_;
  bool record_events_ = true;
};

/// Requires n >= 1 and n not divisible by m + 1.
SampleReport sample_mluka(std::int64_t m, std::int64_t n, CountedBitSource& src,
                          int grouping = 1);

/// Uniform m-Dyck path of length n, from an m-Lukasiewicz path of length
/// n + 1 with its final D removed. Requires (m + 1) | n.
SampleReport sample_mdyck(std::int64_t m, std::int64_t n, CountedBitSource& src,
                          int grouping = 1);

struct CostExperimentConfig {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t samples = 1;
  std::uint64_t seed = 0;
  int grouping = 1;
  /// 0 selects the hardware concurrency.
  unsigned threads = 0;
};

/// Per-run costs and their aggregates. Run k uses the source seeded with
/// derive_seed(seed, k), so results do not depend on the thread count.
struct CostTable {
  std::int64_t n = 0;
  std::vector<std::uint64_t> bits;
  std::vector<std::uint64_t> accesses;
  std::vector<std::int64_t> prefix_heights;
  RunningStats bits_per_step;
  RunningStats accesses_per_step;
  RunningStats prefix_height;
  /// branch_counts[i] = number of runs whose i-th iteration unfolded.
  std::vector<std::uint64_t> branch_counts;

  double branch_frequency(std::int64_t i) const {
    return static_cast<double>(branch_counts[static_cast<std::size_t>(i)]) /
           static_cast<double>(bits.size());
  }
};

CostTable run_cost_experiment(const CostExperimentConfig& config);

/// r / (m i + r) with r = i mod (m + 1).
double branch_probability(std::int64_t m, std::int64_t i);

}  // namespace mdyck

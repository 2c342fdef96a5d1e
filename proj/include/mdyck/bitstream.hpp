#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mdyck/path.hpp"

namespace mdyck {

/// Seedable stream of unbiased random bits with an exact consumption counter.
///
/// Also models UniformRandomBitGenerator; each call to operator() draws a
/// fresh 64-bit word and is charged 64 bits.
class CountedBitSource {
 public:
  using result_type = std::uint64_t;

  explicit CountedBitSource(std::uint64_t seed) : engine_(seed) {}

  bool next_bit() {
    if (available_ == 0) {
      buffer_ = engine_();
      available_ = 64;
    }
    const bool bit = (buffer_ & 1U) != 0;
    buffer_ >>= 1;
    --available_;
    ++consumed_;
    return bit;
  }

  result_type operator()() {
    consumed_ += 64;
    return engine_();
  }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t bits_consumed() const noexcept { return consumed_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  int available_ = 0;
  std::uint64_t consumed_ = 0;
};

/// Decorrelated seed for the index-th independent stream derived from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Exactly uniform integer in [1, k] by the fast dice roller (bit recycling
/// with rejection). k = 1 costs no bits. Requires 1 <= k <= 2^62.
std::int64_t draw_uniform(CountedBitSource& src, std::int64_t k);

/// Uniform decoration: a_i uniform on [1, m] for i < h_bar, a_{h_bar} uniform
/// on [1, r].
std::vector<std::int64_t> draw_decoration(CountedBitSource& src, std::int64_t m,
                                          std::int64_t h_bar, std::int64_t r);

/// Shannon entropy in bits of Bernoulli(1 / (m + 1)).
double step_entropy(std::int64_t m);

/// Knuth-Yao generator for g independent steps, each D with probability
/// 1 / (m + 1) and U otherwise.
///
/// The g-fold product has (m + 1)^g outcomes but only g + 1 distinct
/// probabilities m^{g-j} / (m + 1)^g, one per number j of D steps. The
/// discrete distribution generating tree is walked level by level: at depth d
/// every outcome of class j whose probability has binary digit 1 at position
/// d is a leaf. Digits come from exact remainder arithmetic, so sampling is
/// exact and the expected cost per group is below its entropy plus two.
class BernoulliGen {
 public:
  static constexpr int kMaxGrouping = 16;

  explicit BernoulliGen(std::int64_t m, int grouping = 1);

  std::int64_t m() const noexcept { return m_; }
  int grouping() const noexcept { return grouping_; }

  /// One step; groups of g are drawn jointly and served in order.
  Step draw_step(CountedBitSource& src) {
    if (buffered_ == 0) {
      buffer_ = draw_group(src);
      buffered_ = grouping_;
    }
    const Step s = (buffer_ & 1U) != 0 ? Step::U : Step::D;
    buffer_ >>= 1;
    --buffered_;
    return s;
  }

  /// A whole group as a mask, bit t set when step t is U.
  std::uint32_t draw_group(CountedBitSource& src) {
    return walk([&src] { return src.next_bit(); });
  }

  /// Runs the tree walk on a fixed bit sequence; empty when the sequence ends
  /// before a leaf is reached.
  std::optional<std::uint32_t> walk_bits(std::span<const std::uint8_t> bits) const;

  /// Binary digit at position depth >= 1 of the probability of one outcome
  /// with `downs` D steps.
  bool digit(int downs, std::int64_t depth) const;

  std::uint64_t denominator() const noexcept { return denominator_; }
  std::uint64_t numerator(int downs) const { return numerators_[static_cast<std::size_t>(downs)]; }
  std::uint64_t multiplicity(int downs) const {
    return multiplicity_[static_cast<std::size_t>(downs)];
  }

  /// Expected number of bits per step, summed over tree levels up to
  /// max_depth.
  double expected_bits_per_step(std::int64_t max_depth = 256) const;

 private:
  static constexpr std::int64_t kCachedDepth = 128;

  template <class NextBit>
  std::uint32_t walk(NextBit&& next_bit) const {
    std::uint64_t node = 0;
    for (std::int64_t depth = 1;; ++depth) {
      node = 2 * node + (next_bit() ? 1U : 0U);
      for (int j = 0; j <= grouping_; ++j) {
        if (!digit(j, depth)) continue;
        const std::uint64_t leaves = multiplicity_[static_cast<std::size_t>(j)];
        if (node < leaves) return unrank(j, node);
        node -= leaves;
      }
    }
  }

  std::uint32_t unrank(int downs, std::uint64_t rank) const;

  std::int64_t m_;
  int grouping_;
  std::uint64_t denominator_ = 1;
  std::vector<std::uint64_t> numerators_;
  std::vector<std::uint64_t> multiplicity_;
  // digits_[j][d - 1] for d <= kCachedDepth, and the remainder after it.
  std::vector<std::vector<std::uint8_t>> digits_;
  std::vector<std::uint64_t> tail_remainder_;
  std::uint32_t buffer_ = 0;
  int buffered_ = 0;
};

}  // namespace mdyck

#include "mdyck/bitstream.hpp"

#include <cmath>
#include <stdexcept>

namespace mdyck {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t small_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

std::int64_t draw_uniform(CountedBitSource& src, std::int64_t k) {
  if (k < 1 || k > (std::int64_t{1} << 62))
    throw std::invalid_argument("draw_uniform requires 1 <= k <= 2^62");
  if (k == 1) return 1;
  const auto bound = static_cast<std::uint64_t>(k);
  // Invariant: value is uniform on [0, range).
  std::uint64_t range = 1;
  std::uint64_t value = 0;
  while (true) {
    range <<= 1;
    value = 2 * value + (src.next_bit() ? 1U : 0U);
    if (range >= bound) {
      if (value < bound) return static_cast<std::int64_t>(value) + 1;
      range -= bound;
      value -= bound;
    }
  }
}

std::vector<std::int64_t> draw_decoration(CountedBitSource& src, std::int64_t m,
                                          std::int64_t h_bar, std::int64_t r) {
  if (m < 1 || h_bar < 0 || r < 1 || r > m)
    throw std::invalid_argument("draw_decoration requires m >= 1, h_bar >= 0, 1 <= r <= m");
  std::vector<std::int64_t> deco;
  deco.reserve(static_cast<std::size_t>(h_bar + 1));
  for (std::int64_t i = 0; i < h_bar; ++i) deco.push_back(draw_uniform(src, m));
  deco.push_back(draw_uniform(src, r));
  return deco;
}

double step_entropy(std::int64_t m) {
  const double p = 1.0 / static_cast<double>(m + 1);
  const double q = 1.0 - p;
  return -p * std::log2(p) - q * std::log2(q);
}

BernoulliGen::BernoulliGen(std::int64_t m, int grouping) : m_(m), grouping_(grouping) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (grouping < 1 || grouping > kMaxGrouping)
    throw std::invalid_argument("grouping must lie in [1, 16]");
  const auto base = static_cast<std::uint64_t>(m + 1);
  for (int i = 0; i < grouping; ++i) {
    if (denominator_ > (std::uint64_t{1} << 62) / base)
      throw std::invalid_argument("(m + 1)^grouping exceeds 2^62");
    denominator_ *= base;
  }
  numerators_.resize(static_cast<std::size_t>(grouping + 1));
  multiplicity_.resize(static_cast<std::size_t>(grouping + 1));
  digits_.resize(static_cast<std::size_t>(grouping + 1));
  tail_remainder_.resize(static_cast<std::size_t>(grouping + 1));
  for (int downs = 0; downs <= grouping; ++downs) {
    std::uint64_t num = 1;
    for (int i = 0; i < grouping - downs; ++i) num *= static_cast<std::uint64_t>(m);
    const auto j = static_cast<std::size_t>(downs);
    numerators_[j] = num;
    multiplicity_[j] = small_binomial(grouping, downs);
    std::uint64_t rem = num;
    digits_[j].reserve(kCachedDepth);
    for (std::int64_t d = 1; d <= kCachedDepth; ++d) {
      rem *= 2;
      const bool bit = rem >= denominator_;
      if (bit) rem -= denominator_;
      digits_[j].push_back(bit ? 1 : 0);
    }
    tail_remainder_[j] = rem;
  }
}

bool BernoulliGen::digit(int downs, std::int64_t depth) const {
  const auto j = static_cast<std::size_t>(downs);
  if (depth <= kCachedDepth) return digits_[j][static_cast<std::size_t>(depth - 1)] != 0;
  std::uint64_t rem = tail_remainder_[j];
  bool bit = false;
  for (std::int64_t d = kCachedDepth + 1; d <= depth; ++d) {
    rem *= 2;
    bit = rem >= denominator_;
    if (bit) rem -= denominator_;
  }
  return bit;
}

std::uint32_t BernoulliGen::unrank(int downs, std::uint64_t rank) const {
  // Combinatorial number system over step positions 0..g-1; positions chosen
  // as D are left clear in the mask.
  std::uint32_t mask = (1U << grouping_) - 1U;
  int remaining = downs;
  for (int pos = 0; pos < grouping_ && remaining > 0; ++pos) {
    const std::uint64_t with_d_here = small_binomial(grouping_ - pos - 1, remaining - 1);
    if (rank < with_d_here) {
      mask &= ~(1U << pos);
      --remaining;
    } else {
      rank -= with_d_here;
    }
  }
  return mask;
}

std::optional<std::uint32_t> BernoulliGen::walk_bits(std::span<const std::uint8_t> bits) const {
  // Past the end the walk is fed zeros, which reach a leaf on the leftmost
  // branch at the next level holding one; the outcome is then discarded.
  std::size_t next = 0;
  bool exhausted = false;
  const std::uint32_t outcome = walk([&] {
    if (next == bits.size()) {
      exhausted = true;
      return false;
    }
    return bits[next++] != 0;
  });
  if (exhausted) return std::nullopt;
  return outcome;
}

double BernoulliGen::expected_bits_per_step(std::int64_t max_depth) const {
  double expected = 0.0;
  double scale = 1.0;
  for (std::int64_t d = 1; d <= max_depth; ++d) {
    scale *= 0.5;
    double leaves = 0.0;
    for (int j = 0; j <= grouping_; ++j)
      if (digit(j, d)) leaves += static_cast<double>(multiplicity_[static_cast<std::size_t>(j)]);
    expected += static_cast<double>(d) * leaves * scale;
  }
  return expected / grouping_;
}

}  // namespace mdyck

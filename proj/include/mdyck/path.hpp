#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mdyck {

/// A step of a lattice path: U rises by 1, D falls by m.
enum class Step : std::uint8_t { D = 0, U = 1 };

/// Quotients and common remainder of the Euclidean divisions of length and
/// height by m + 1.
struct ReducedForm {
  std::int64_t n_bar = 0;
  std::int64_t h_bar = 0;
  std::int64_t r = 0;

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// Counts cell touches on path storage. Each cell of a path visited by an
/// operation adds one, regardless of whether it is read, written or both.
struct AccessMeter {
  std::uint64_t count = 0;
  void touch(std::uint64_t cells = 1) noexcept { count += cells; }
};

/// Floor division for a signed dividend and positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  const std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// Path over the steps {U = +1, D = -m}, stored one bit per step.
///
/// The up/down counts are maintained on every mutation so height() is O(1).
class Path {
 public:
  explicit Path(std::int64_t m = 1);

  /// Parses a string over {U, D}; throws std::invalid_argument on any other
  /// character or on m < 1.
  static Path parse(std::string_view text, std::int64_t m);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::int64_t n_up() const noexcept { return n_up_; }
  std::int64_t n_down() const noexcept { return size_ - n_up_; }

  /// Zero-based step access.
  Step operator[](std::int64_t i) const noexcept {
    return static_cast<Step>((words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U);
  }
  void set(std::int64_t i, Step s) noexcept;

  void push_back(Step s);
  void pop_back() noexcept;
  void reserve(std::int64_t n) { words_.reserve(static_cast<std::size_t>((n + 63) / 64)); }
  void clear() noexcept;

  /// Sub-path [first, first + count).
  Path slice(std::int64_t first, std::int64_t count) const;
  void append(const Path& other);

  std::string to_string() const;

  friend bool operator==(const Path& a, const Path& b);

 private:
  std::vector<std::uint64_t> words_;
  std::int64_t m_ = 1;
  std::int64_t size_ = 0;
  std::int64_t n_up_ = 0;
};

constexpr std::int64_t step_height(Step s, std::int64_t m) noexcept {
  return s == Step::U ? 1 : -m;
}

std::int64_t height(const Path& p) noexcept;
ReducedForm reduced_form(std::int64_t length, std::int64_t height, std::int64_t m) noexcept;
ReducedForm reduced_form(const Path& p) noexcept;

/// Every prefix, the whole path included, has nonnegative height.
bool is_mdyck_prefix(const Path& p) noexcept;
/// Every proper prefix has nonnegative height and the whole path is negative.
bool is_mluka(const Path& p) noexcept;
bool is_mdyck_path(const Path& p) noexcept;

/// An m-Dyck prefix with a decoration (a_0, ..., a_{h_bar}).
struct DecoratedPrefix {
  Path path;
  std::vector<std::int64_t> decoration;

  friend bool operator==(const DecoratedPrefix&, const DecoratedPrefix&) = default;
};

/// An m-Lukasiewicz path with a distinguished step, 1-based.
struct PointedLuka {
  Path path;
  std::int64_t point = 1;

  friend bool operator==(const PointedLuka&, const PointedLuka&) = default;
};

/// Decoration bounds: 1 <= a_i <= m for i < h_bar and 1 <= a_{h_bar} <= r.
bool is_valid_decoration(const ReducedForm& rf, std::int64_t m,
                         const std::vector<std::int64_t>& decoration) noexcept;
bool is_valid(const DecoratedPrefix& w) noexcept;
bool is_valid(const PointedLuka& v) noexcept;

}  // namespace mdyck

#include "mdyck/bijection.hpp"

#include <stdexcept>

namespace mdyck {

namespace {

// Zero-based positions of the U steps opening each factor U q_i.
std::vector<std::int64_t> factor_starts(const Path& w, std::span<const std::int64_t> decoration) {
  std::vector<std::int64_t> starts(decoration.size());
  auto i = static_cast<std::int64_t>(decoration.size()) - 1;
  std::int64_t suffix_height = 0;
  for (std::int64_t t = w.size() - 1; t >= 0 && i >= 0; --t) {
    suffix_height += step_height(w[t], w.m());
    if (suffix_height == decoration[static_cast<std::size_t>(i)]) {
      starts[static_cast<std::size_t>(i)] = t;
      suffix_height = 0;
      --i;
    }
  }
  if (i >= 0) throw std::logic_error("decoration inconsistent with path during factorization");
  return starts;
}

}  // namespace

PrefixFactorization factorize_prefix(const DecoratedPrefix& w) {
  if (!is_valid(w)) throw std::invalid_argument("not a valid decorated m-Dyck prefix");
  PrefixFactorization f;
  f.starts = factor_starts(w.path, w.decoration);
  f.head = w.path.slice(0, f.starts.front());
  for (std::size_t i = 0; i < f.starts.size(); ++i) {
    const std::int64_t begin = f.starts[i] + 1;
    const std::int64_t end = i + 1 < f.starts.size() ? f.starts[i + 1] : w.path.size();
    f.factors.push_back(w.path.slice(begin, end - begin));
  }
  return f;
}

std::int64_t fold_in_place(Path& path, std::span<const std::int64_t> decoration,
                           AccessMeter& meter) {
  if (decoration.empty()) throw std::logic_error("fold requires a non-empty decoration");
  const std::int64_t m = path.m();
  auto i = static_cast<std::int64_t>(decoration.size()) - 1;
  // Cell t receives the old content of cell t + 1, or D where cell t + 1
  // opened a factor; the last cell always receives D.
  Step pending = Step::D;
  std::int64_t suffix_height = 0;
  for (std::int64_t t = path.size() - 1; t >= 0; --t) {
    const Step old = path[t];
    path.set(t, pending);
    meter.touch();
    suffix_height += step_height(old, m);
    if (suffix_height == decoration[static_cast<std::size_t>(i)]) {
      if (i == 0) return t + 1;
      pending = Step::D;
      suffix_height = 0;
      --i;
    } else {
      pending = old;
    }
  }
  throw std::logic_error("decoration inconsistent with path during fold");
}

void unfold_in_place(Path& path, std::int64_t point, AccessMeter& meter,
                     std::vector<std::int64_t>* decoration_out) {
  const std::int64_t m = path.m();
  // Cell t receives the old content of cell t - 1, or U where cell t - 1
  // closed a factor q_i D; the pointed cell always receives U.
  Step carry = Step::U;
  std::int64_t factor_height = 0;
  for (std::int64_t t = point - 1; t < path.size(); ++t) {
    const Step old = path[t];
    path.set(t, carry);
    meter.touch();
    factor_height += step_height(old, m);
    if (factor_height < 0) {
      if (decoration_out != nullptr) decoration_out->push_back(factor_height + m + 1);
      carry = Step::U;
      factor_height = 0;
    } else {
      carry = old;
    }
  }
  if (factor_height != 0 || carry != Step::U)
    throw std::logic_error("unfold input is not an m-Lukasiewicz path");
}

PointedLuka fold(const DecoratedPrefix& w) {
  if (!is_valid(w)) throw std::invalid_argument("not a valid decorated m-Dyck prefix");
  PointedLuka v{w.path, 0};
  AccessMeter meter;
  v.point = fold_in_place(v.path, w.decoration, meter);
  return v;
}

DecoratedPrefix unfold(const PointedLuka& v) {
  if (!is_valid(v)) throw std::invalid_argument("not a valid pointed m-Lukasiewicz path");
  DecoratedPrefix w{v.path, {}};
  AccessMeter meter;
  unfold_in_place(w.path, v.point, meter, &w.decoration);
  return w;
}

}  // namespace mdyck

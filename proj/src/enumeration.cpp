#include "mdyck/enumeration.hpp"

#include <stdexcept>

namespace mdyck {

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigCount luka_count(std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (n < 1) throw std::invalid_argument("luka_count requires n >= 1");
  const std::int64_t r = n % (m + 1);
  if (r == 0) return 0;
  BigCount scaled = binomial(n, n / (m + 1)) * r;
  if (scaled % n != 0) throw std::logic_error("r * C(n, n_bar) not divisible by n");
  return scaled / n;
}

BigCount prefix_weighted_count(std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (n < 0) throw std::invalid_argument("prefix_weighted_count requires n >= 0");
  return binomial(n, n / (m + 1));
}

std::vector<BigCount> prefix_polynomial(std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (n < 0) throw std::invalid_argument("prefix_polynomial requires n >= 0");
  // by_height[h] = number of m-Dyck prefixes of the current length ending at h.
  std::vector<BigCount> by_height{1};
  for (std::int64_t len = 1; len <= n; ++len) {
    std::vector<BigCount> next(by_height.size() + 1);
    for (std::size_t h = 0; h < by_height.size(); ++h) {
      if (by_height[h] == 0) continue;
      next[h + 1] += by_height[h];
      if (static_cast<std::int64_t>(h) >= m) next[h - static_cast<std::size_t>(m)] += by_height[h];
    }
    by_height = std::move(next);
  }
  const std::int64_t r = n % (m + 1);
  std::vector<BigCount> poly;
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    if (by_height[h] == 0) continue;
    const auto h_bar = static_cast<std::size_t>(floor_div(static_cast<std::int64_t>(h) - r, m + 1));
    if (poly.size() <= h_bar) poly.resize(h_bar + 1);
    poly[h_bar] += by_height[h];
  }
  if (poly.empty()) poly.emplace_back(0);
  return poly;
}

BigCount evaluate(const std::vector<BigCount>& poly, std::int64_t u) {
  BigCount acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * u + *it;
  return acc;
}

BigCount fuss_catalan(std::int64_t m, std::int64_t t) {
  if (m < 1 || t < 0) throw std::invalid_argument("fuss_catalan requires m >= 1, t >= 0");
  BigCount c = binomial((m + 1) * t, t);
  if (c % (m * t + 1) != 0) throw std::logic_error("Fuss-Catalan division not exact");
  return c / (m * t + 1);
}

namespace {

struct Generator {
  std::int64_t n;
  Family family;
  const std::function<void(const Path&)>& visit;
  Path current;

  void extend(std::int64_t h) {
    const std::int64_t depth = current.size();
    if (depth == n) {
      const bool accept = family == Family::mdyck_prefix ? h >= 0
                          : family == Family::mluka      ? h < 0
                                                         : h == 0;
      if (accept) visit(current);
      return;
    }
    const std::int64_t remaining = n - depth;
    for (Step s : {Step::D, Step::U}) {
      const std::int64_t next = h + step_height(s, current.m());
      const bool last = remaining == 1;
      // Only the final step of a Lukasiewicz path may go below zero.
      if (next < 0 && !(family == Family::mluka && last)) continue;
      if (family == Family::mdyck_path && next > current.m() * (remaining - 1)) continue;
      if (family == Family::mluka && next >= 0 && next - current.m() * (remaining - 1) >= 0)
        continue;
      current.push_back(s);
      extend(next);
      current.pop_back();
    }
  }
};

}  // namespace

void for_each_path(std::int64_t m, std::int64_t n, Family family,
                   const std::function<void(const Path&)>& visit) {
  if (n < 0) throw std::invalid_argument("path length must be nonnegative");
  Generator g{n, family, visit, Path(m)};
  g.current.reserve(n);
  g.extend(0);
}

std::vector<Path> enumerate_all(std::int64_t m, std::int64_t n, Family family) {
  if (n > kMaxEnumerationLength)
    throw std::invalid_argument("enumerate_all: n exceeds the exhaustive bound of " +
                                std::to_string(kMaxEnumerationLength));
  std::vector<Path> out;
  for_each_path(m, n, family, [&](const Path& p) { out.push_back(p); });
  return out;
}

void for_each_decoration(const ReducedForm& rf, std::int64_t m,
                         const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (rf.r == 0 || rf.h_bar < 0) return;
  std::vector<std::int64_t> deco(static_cast<std::size_t>(rf.h_bar + 1), 1);
  while (true) {
    visit(deco);
    // Odometer increment with the last digit bounded by r.
    auto i = static_cast<std::int64_t>(deco.size()) - 1;
    while (i >= 0) {
      const std::int64_t bound = i == rf.h_bar ? rf.r : m;
      auto& digit = deco[static_cast<std::size_t>(i)];
      if (digit < bound) {
        ++digit;
        break;
      }
      digit = 1;
      --i;
    }
    if (i < 0) return;
  }
}

}  // namespace mdyck

#include "mdyck/path.hpp"

#include <stdexcept>

namespace mdyck {

Path::Path(std::int64_t m) : m_(m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

Path Path::parse(std::string_view text, std::int64_t m) {
  Path p(m);
  p.reserve(static_cast<std::int64_t>(text.size()));
  for (char c : text) {
    switch (c) {
      case 'U':
        p.push_back(Step::U);
        break;
      case 'D':
        p.push_back(Step::D);
        break;
      default:
        throw std::invalid_argument(std::string("invalid step character '") + c +
                                    "', expected U or D");
    }
  }
  return p;
}

void Path::set(std::int64_t i, Step s) noexcept {
  auto& word = words_[static_cast<std::size_t>(i >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  const bool was_up = (word & bit) != 0;
  const bool up = s == Step::U;
  if (was_up == up) return;
  word ^= bit;
  n_up_ += up ? 1 : -1;
}

void Path::push_back(Step s) {
  if ((size_ & 63) == 0) words_.push_back(0);
  if (s == Step::U) {
    words_.back() |= std::uint64_t{1} << (size_ & 63);
    ++n_up_;
  }
  ++size_;
}

void Path::pop_back() noexcept {
  --size_;
  if ((*this)[size_] == Step::U) {
    words_.back() &= ~(std::uint64_t{1} << (size_ & 63));
    --n_up_;
  }
  if ((size_ & 63) == 0) words_.pop_back();
}

void Path::clear() noexcept {
  words_.clear();
  size_ = 0;
  n_up_ = 0;
}

Path Path::slice(std::int64_t first, std::int64_t count) const {
  Path out(m_);
  out.reserve(count);
  for (std::int64_t i = first; i < first + count; ++i) out.push_back((*this)[i]);
  return out;
}

void Path::append(const Path& other) {
  reserve(size_ + other.size_);
  for (std::int64_t i = 0; i < other.size_; ++i) push_back(other[i]);
}

std::string Path::to_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(size_));
  for (std::int64_t i = 0; i < size_; ++i) s.push_back((*this)[i] == Step::U ? 'U' : 'D');
  return s;
}

bool operator==(const Path& a, const Path& b) {
  return a.m_ == b.m_ && a.size_ == b.size_ && a.words_ == b.words_;
}

std::int64_t height(const Path& p) noexcept { return p.n_up() - p.m() * p.n_down(); }

ReducedForm reduced_form(std::int64_t length, std::int64_t h, std::int64_t m) noexcept {
  ReducedForm rf;
  rf.n_bar = length / (m + 1);
  rf.r = length % (m + 1);
  rf.h_bar = floor_div(h - rf.r, m + 1);
  return rf;
}

ReducedForm reduced_form(const Path& p) noexcept {
  return reduced_form(p.size(), height(p), p.m());
}

bool is_mdyck_prefix(const Path& p) noexcept {
  std::int64_t h = 0;
  for (std::int64_t i = 0; i < p.size(); ++i) {
    h += step_height(p[i], p.m());
    if (h < 0) return false;
  }
  return true;
}

bool is_mluka(const Path& p) noexcept {
  if (p.empty()) return false;
  std::int64_t h = 0;
  for (std::int64_t i = 0; i + 1 < p.size(); ++i) {
    h += step_height(p[i], p.m());
    if (h < 0) return false;
  }
  return h + step_height(p[p.size() - 1], p.m()) < 0;
}

bool is_mdyck_path(const Path& p) noexcept { return height(p) == 0 && is_mdyck_prefix(p); }

bool is_valid_decoration(const ReducedForm& rf, std::int64_t m,
                         const std::vector<std::int64_t>& decoration) noexcept {
  if (rf.r == 0 || rf.h_bar < 0) return false;
  if (static_cast<std::int64_t>(decoration.size()) != rf.h_bar + 1) return false;
  for (std::int64_t i = 0; i < rf.h_bar; ++i) {
    const auto a = decoration[static_cast<std::size_t>(i)];
    if (a < 1 || a > m) return false;
  }
  const auto last = decoration.back();
  return last >= 1 && last <= rf.r;
}

bool is_valid(const DecoratedPrefix& w) noexcept {
  return is_mdyck_prefix(w.path) &&
         is_valid_decoration(reduced_form(w.path), w.path.m(), w.decoration);
}

bool is_valid(const PointedLuka& v) noexcept {
  return v.point >= 1 && v.point <= v.path.size() && is_mluka(v.path);
}

}  // namespace mdyck

#pragma once

// Naive reference implementations on plain strings, kept independent of the
// library so that tests compare two derivations of the same fact.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t height(const std::string& w, std::int64_t m) {
  std::int64_t h = 0;
  for (char c : w) h += c == 'U' ? 1 : -m;
  return h;
}

inline bool is_prefix(const std::string& w, std::int64_t m) {
  for (std::size_t k = 1; k <= w.size(); ++k)
    if (height(w.substr(0, k), m) < 0) return false;
  return true;
}

inline bool is_luka(const std::string& w, std::int64_t m) {
  if (w.empty() || height(w, m) >= 0) return false;
  return is_prefix(w.substr(0, w.size() - 1), m);
}

inline bool is_dyck(const std::string& w, std::int64_t m) {
  return is_prefix(w, m) && height(w, m) == 0;
}

inline std::string from_mask(std::uint64_t mask, int n) {
  std::string w(static_cast<std::size_t>(n), 'D');
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1U) w[static_cast<std::size_t>(i)] = 'U';
  return w;
}

// h = (m + 1) h_bar + r with r = n mod (m + 1).
inline std::pair<std::int64_t, std::int64_t> hbar_r(std::int64_t n, std::int64_t h, std::int64_t m) {
  const std::int64_t r = n % (m + 1);
  const std::int64_t diff = h - r;
  std::int64_t q = diff / (m + 1);
  if (diff % (m + 1) != 0 && diff < 0) --q;
  return {q, r};
}

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t x = 1;
  while (e-- > 0) x *= b;
  return x;
}

// Shortest suffixes of prescribed heights, peeled from the right.
inline std::pair<std::string, std::int64_t> fold(const std::string& w, const std::vector<std::int64_t>& a,
                                                 std::int64_t m) {
  std::string rest = w;
  std::vector<std::string> qs(a.size());
  for (std::size_t i = a.size(); i-- > 0;) {
    std::size_t cut = rest.size();
    while (true) {
      --cut;
      if (height(rest.substr(cut), m) == a[i]) break;
    }
    qs[i] = rest.substr(cut + 1);
    rest = rest.substr(0, cut);
  }
  std::string v = rest;
  for (const auto& q : qs) v += q + 'D';
  return {v, static_cast<std::int64_t>(rest.size()) + 1};
}

// Cuts q after each first passage below zero.
inline std::pair<std::string, std::vector<std::int64_t>> unfold(const std::string& v, std::int64_t point,
                                                                std::int64_t m) {
  std::string w = v.substr(0, static_cast<std::size_t>(point - 1));
  std::vector<std::int64_t> a;
  std::string factor;
  for (std::size_t k = static_cast<std::size_t>(point - 1); k < v.size(); ++k) {
    factor += v[k];
    if (height(factor, m) < 0) {
      const std::string q = factor.substr(0, factor.size() - 1);
      w += 'U' + q;
      a.push_back(1 + height(q, m));
      factor.clear();
    }
  }
  return {w, a};
}

inline std::string random_prefix(std::mt19937_64& rng, std::int64_t m, std::int64_t n) {
  std::string w;
  std::int64_t h = 0;
  std::bernoulli_distribution up(static_cast<double>(m) / static_cast<double>(m + 1));
  while (static_cast<std::int64_t>(w.size()) < n) {
    if (up(rng) || h < m) {
      w += 'U';
      ++h;
    } else {
      w += 'D';
      h -= m;
    }
  }
  return w;
}

}  // namespace oracle

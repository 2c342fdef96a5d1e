#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdyck/path.hpp"

namespace mdyck {

using BigCount = boost::multiprecision::cpp_int;

BigCount binomial(std::int64_t n, std::int64_t k);

/// Number of m-Lukasiewicz paths of length n: (r / n) * C(n, n_bar).
/// Zero when (m + 1) divides n. Requires n >= 1.
BigCount luka_count(std::int64_t m, std::int64_t n);

/// Sum over m-Dyck prefixes w of length n of m^{h_bar(w)}, i.e. C(n, n_bar).
BigCount prefix_weighted_count(std::int64_t m, std::int64_t n);

/// Coefficients of P_n(u) = sum_w u^{h_bar(w)}, indexed by h_bar, computed
/// by dynamic programming over (length, height).
std::vector<BigCount> prefix_polynomial(std::int64_t m, std::int64_t n);

BigCount evaluate(const std::vector<BigCount>& poly, std::int64_t u);

/// Number of m-Dyck paths of length (m + 1) t: C((m + 1) t, t) / (m t + 1).
BigCount fuss_catalan(std::int64_t m, std::int64_t t);

enum class Family { mdyck_prefix, mluka, mdyck_path };

inline constexpr std::int64_t kMaxEnumerationLength = 26;

/// Visits every path of length n in the family, in lexicographic order
/// (D < U), by depth-first generation with height pruning.
void for_each_path(std::int64_t m, std::int64_t n, Family family,
                   const std::function<void(const Path&)>& visit);

/// Materialized form of for_each_path. Throws std::invalid_argument when
/// n > kMaxEnumerationLength.
std::vector<Path> enumerate_all(std::int64_t m, std::int64_t n, Family family);

/// Visits every valid decoration of a prefix with the given reduced form,
/// in lexicographic order.
void for_each_decoration(const ReducedForm& rf, std::int64_t m,
                         const std::function<void(const std::vector<std::int64_t>&)>& visit);

}  // namespace mdyck

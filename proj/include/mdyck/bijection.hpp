#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdyck/path.hpp"

namespace mdyck {

/// w = head . U q_0 . U q_1 ... U q_k, with height(U q_i) = a_i.
struct PrefixFactorization {
  Path head;
  std::vector<Path> factors;
  /// Zero-based index in w of the U opening each factor.
  std::vector<std::int64_t> starts;
};

/// Splits a decorated m-Dyck prefix by scanning right to left for the
/// shortest suffix of each decorated height. Throws std::invalid_argument if
/// `w` is not a valid decorated prefix.
PrefixFactorization factorize_prefix(const DecoratedPrefix& w);

/// Folds a decorated m-Dyck prefix into a pointed m-Lukasiewicz path:
/// head . q_0 D . q_1 D ... q_k D, pointed at |head| + 1.
PointedLuka fold(const DecoratedPrefix& w);

/// Inverse of fold.
DecoratedPrefix unfold(const PointedLuka& v);

/// In-place fold. Touches only the cells from the returned point to the end,
/// once each, in a single right-to-left pass. The caller guarantees that
/// `path` is an m-Dyck prefix and `decoration` is valid for it; a mismatch is
/// reported as std::logic_error. Returns the 1-based point.
std::int64_t fold_in_place(Path& path, std::span<const std::int64_t> decoration,
                           AccessMeter& meter);

/// In-place unfold of an m-Lukasiewicz path cut before step `point`
/// (1-based). Touches only cells point..n, once each. The decoration is
/// appended to `decoration_out` when it is non-null.
void unfold_in_place(Path& path, std::int64_t point, AccessMeter& meter,
                     std::vector<std::int64_t>* decoration_out = nullptr);

}  // namespace mdyck

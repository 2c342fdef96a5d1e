#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace mdyck {

struct VerifyReport {
  std::uint64_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Exhaustive oracle suite for one m and all lengths 1..max_n: enumeration
/// against the closed counting formulas, the prefix polynomial against its
/// evaluation, and fold/unfold round trips over every decorated prefix and
/// every pointed m-Lukasiewicz path. Progress lines go to `log` if non-null.
VerifyReport run_oracle_suite(std::int64_t m, std::int64_t max_n, std::ostream* log = nullptr);

}  // namespace mdyck

#include "mdyck/verify.hpp"

#include <stdexcept>

#include "mdyck/bijection.hpp"
#include "mdyck/enumeration.hpp"

namespace mdyck {

namespace {

std::string label(std::int64_t m, std::int64_t n) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": ";
}

}  // namespace

VerifyReport run_oracle_suite(std::int64_t m, std::int64_t max_n, std::ostream* log) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (max_n < 1 || max_n > kMaxEnumerationLength)
    throw std::invalid_argument("max-n must lie in [1, " + std::to_string(kMaxEnumerationLength) + "]");
  VerifyReport report;
  auto check = [&report](bool ok, std::string what) {
    ++report.checks;
    if (!ok) report.failures.push_back(std::move(what));
  };

  for (std::int64_t n = 1; n <= max_n; ++n) {
    const std::int64_t r = n % (m + 1);
    const auto at = label(m, n);

    BigCount weighted = 0;
    BigCount decorated = 0;
    std::uint64_t prefixes = 0;
    for_each_path(m, n, Family::mdyck_prefix, [&](const Path& w) {
      ++prefixes;
      const ReducedForm rf = reduced_form(w);
      weighted += boost::multiprecision::pow(BigCount(m), static_cast<unsigned>(rf.h_bar));
      if (r == 0) return;
      for_each_decoration(rf, m, [&](const std::vector<std::int64_t>& deco) {
        ++decorated;
        const DecoratedPrefix dp{w, deco};
        const PointedLuka v = fold(dp);
        if (!is_valid(v) || v.point != factorize_prefix(dp).starts.front() + 1 || !(unfold(v) == dp))
          check(false, at + "fold round trip failed for " + w.to_string());
      });
    });
    check(weighted == prefix_weighted_count(m, n), at + "weighted prefix count");
    check(evaluate(prefix_polynomial(m, n), m) == weighted, at + "prefix polynomial at u = m");
    check(evaluate(prefix_polynomial(m, n), 1) == prefixes, at + "prefix polynomial at u = 1");

    std::uint64_t lukas = 0;
    BigCount pointed = 0;
    for_each_path(m, n, Family::mluka, [&](const Path& v) {
      ++lukas;
      for (std::int64_t point = 1; point <= n; ++point) {
        ++pointed;
        const PointedLuka pv{v, point};
        const DecoratedPrefix w = unfold(pv);
        if (!is_valid(w) || !(fold(w) == pv))
          check(false, at + "unfold round trip failed for " + v.to_string());
      }
    });
    check(BigCount(lukas) == luka_count(m, n), at + "m-Lukasiewicz count");
    if (r != 0) check(decorated == pointed, at + "decorated prefixes vs pointed paths");

    if (r == 0) {
      std::uint64_t dycks = 0;
      for_each_path(m, n, Family::mdyck_path, [&](const Path&) { ++dycks; });
      check(BigCount(dycks) == fuss_catalan(m, n / (m + 1)), at + "Fuss-Catalan count");
      check(BigCount(dycks) == luka_count(m, n + 1), at + "m-Dyck paths vs L_{n+1}");
    }
    if (log != nullptr)
      *log << at << prefixes << " prefixes, " << lukas << " m-Lukasiewicz paths, "
           << report.failures.size() << " failures so far\n";
  }
  return report;
}

}  // namespace mdyck

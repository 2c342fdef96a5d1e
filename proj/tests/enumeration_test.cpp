#include <gtest/gtest.h>

#include <stdexcept>

#include "mdyck/enumeration.hpp"
#include "oracle.hpp"

using namespace mdyck;

namespace {

struct BruteCounts {
  std::int64_t luka = 0;
  std::int64_t dyck = 0;
  std::int64_t prefixes = 0;
  std::int64_t weighted = 0;
  std::vector<std::int64_t> by_hbar;
};

BruteCounts brute(std::int64_t m, int n) {
  BruteCounts c;
  c.by_hbar.assign(static_cast<std::size_t>(n + 1), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const std::string w = oracle::from_mask(mask, n);
    if (oracle::is_luka(w, m)) ++c.luka;
    if (oracle::is_dyck(w, m)) ++c.dyck;
    if (oracle::is_prefix(w, m)) {
      const auto [h_bar, r] = oracle::hbar_r(n, oracle::height(w, m), m);
      ++c.prefixes;
      c.weighted += oracle::ipow(m, h_bar);
      ++c.by_hbar[static_cast<std::size_t>(h_bar)];
    }
  }
  return c;
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(8, 2), 28);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(100, 50), BigCount("100891344545564193334812497256"));
}

TEST(LukaCount, Examples) {
  EXPECT_EQ(luka_count(1, 3), 1);
  EXPECT_EQ(luka_count(2, 5), 2);
  EXPECT_EQ(luka_count(2, 7), 3);
  EXPECT_EQ(luka_count(2, 8), 7);
  EXPECT_EQ(luka_count(1, 5), 2);
  EXPECT_EQ(luka_count(2, 9), 0);
  EXPECT_THROW(luka_count(2, 0), std::invalid_argument);
}

TEST(PrefixCount, Examples) {
  EXPECT_EQ(prefix_weighted_count(1, 4), 6);
  EXPECT_EQ(prefix_weighted_count(1, 0), 1);
  EXPECT_EQ(prefix_weighted_count(2, 4), 4);
  EXPECT_EQ(prefix_weighted_count(2, 8), 28);
  EXPECT_EQ(prefix_polynomial(1, 2), (std::vector<BigCount>{1, 1}));
  EXPECT_EQ(prefix_polynomial(1, 0), std::vector<BigCount>{1});
}

TEST(Counts, AgreeWithBruteForce) {
  for (std::int64_t m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 16; ++n) {
      const BruteCounts c = brute(m, n);
      const std::int64_t r = n % (m + 1);
      EXPECT_EQ(luka_count(m, n), c.luka) << m << ' ' << n;
      EXPECT_EQ(luka_count(m, n) == 0, r == 0);
      EXPECT_EQ(prefix_weighted_count(m, n), c.weighted) << m << ' ' << n;
      if (r != 0) EXPECT_EQ(BigCount(n) * luka_count(m, n), BigCount(r) * c.weighted);

      const auto poly = prefix_polynomial(m, n);
      for (std::size_t k = 0; k < c.by_hbar.size(); ++k) {
        const BigCount coeff = k < poly.size() ? poly[k] : BigCount(0);
        EXPECT_EQ(coeff, c.by_hbar[k]) << m << ' ' << n << ' ' << k;
      }
      EXPECT_EQ(evaluate(poly, 1), c.prefixes);
      EXPECT_EQ(evaluate(poly, m), prefix_weighted_count(m, n));

      EXPECT_EQ(static_cast<std::int64_t>(enumerate_all(m, n, Family::mluka).size()), c.luka);
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_all(m, n, Family::mdyck_path).size()), c.dyck);
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_all(m, n, Family::mdyck_prefix).size()), c.prefixes);
    }
  }
}

TEST(PrefixPolynomial, RecurrenceWhenLengthIsMultiple) {
  for (std::int64_t m = 1; m <= 3; ++m) {
    for (std::int64_t n = m + 1; n <= 30; n += m + 1) {
      const auto now = prefix_polynomial(m, n);
      const auto before = prefix_polynomial(m, n - 1);
      for (std::int64_t u = 0; u <= 4; ++u)
        EXPECT_EQ(evaluate(now, u), (1 + u) * evaluate(before, u)) << m << ' ' << n;
    }
  }
}

TEST(FussCatalan, MatchesDyckCountsAndShiftedLuka) {
  EXPECT_EQ(fuss_catalan(2, 2), 3);
  EXPECT_EQ(fuss_catalan(1, 2), 2);
  EXPECT_EQ(fuss_catalan(1, 0), 1);
  for (std::int64_t m = 1; m <= 3; ++m) {
    for (std::int64_t t = 0; t <= 5; ++t) {
      const std::int64_t n = (m + 1) * t;
      EXPECT_EQ(luka_count(m, n + 1), fuss_catalan(m, t));
      if (n <= 20)
        EXPECT_EQ(static_cast<std::int64_t>(enumerate_all(m, n, Family::mdyck_path).size()),
                  fuss_catalan(m, t));
    }
  }
}

TEST(Enumerate, SmallLists) {
  const auto luka = enumerate_all(2, 8, Family::mluka);
  EXPECT_EQ(luka.size(), 7U);
  for (const auto& p : luka) EXPECT_TRUE(is_mluka(p));

  const auto dyck = enumerate_all(1, 2, Family::mdyck_path);
  ASSERT_EQ(dyck.size(), 1U);
  EXPECT_EQ(dyck[0].to_string(), "UD");

  const auto one = enumerate_all(1, 1, Family::mluka);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].to_string(), "D");

  const auto m2n5 = enumerate_all(2, 5, Family::mluka);
  ASSERT_EQ(m2n5.size(), 2U);
  EXPECT_EQ(m2n5[0].to_string(), "UUDUD");
  EXPECT_EQ(m2n5[1].to_string(), "UUUDD");

  EXPECT_THROW(enumerate_all(1, kMaxEnumerationLength + 1, Family::mluka), std::invalid_argument);
}

TEST(Decorations, CountIsRTimesMToTheHbar) {
  for (std::int64_t m = 1; m <= 3; ++m) {
    for (std::int64_t h_bar = 0; h_bar <= 4; ++h_bar) {
      for (std::int64_t r = 1; r <= m; ++r) {
        std::int64_t seen = 0;
        for_each_decoration({0, h_bar, r}, m, [&](const std::vector<std::int64_t>& a) {
          ++seen;
          EXPECT_TRUE(is_valid_decoration({0, h_bar, r}, m, a));
        });
        EXPECT_EQ(seen, r * oracle::ipow(m, h_bar));
      }
    }
  }
}

}  // namespace

#include <doctest.h>

#include "helpers.hpp"
#include "igusa/counting.hpp"

using namespace igusa;
using igusa::test::q;
using igusa::test::qs;

TEST_CASE("ZetaParams validation") {
  CHECK_THROWS_AS(ZetaParams(0, 2, 5), InvalidParams);
  CHECK_THROWS_AS(ZetaParams(2, 0, 5), InvalidParams);
  CHECK_THROWS_AS(ZetaParams(2, 2, 9), InvalidParams);
  CHECK_THROWS_AS(ZetaParams(2, 2, 1), InvalidParams);
  const ZetaParams params(4, 6, 5);
  CHECK(params.d() == 2);
  CHECK_FALSE(params.p_divides_both());
  CHECK(ZetaParams(4, 6, 2).p_divides_both());
  CHECK(ZetaParams(5, 3, 5).p_divides_exactly_one());
}

TEST_CASE("n0_theorem") {
  CHECK(n0_theorem(ZetaParams(3, 2, 7)) == 7);
  CHECK(n0_theorem(ZetaParams(2, 2, 5)) == 9);
  CHECK(n0_theorem(ZetaParams(4, 4, 5)) == 1);
}

TEST_CASE("n0_bruteforce") {
  CHECK(n0_bruteforce(ZetaParams(3, 2, 2)) == 2);
  CHECK(n0_bruteforce(ZetaParams(3, 2, 7)) == 7);
  CHECK(n0_bruteforce(ZetaParams(1, 1, 5)) == 5);
  CHECK(n0_bruteforce(ZetaParams(2, 2, 5)) == 9);
  CHECK(n0_bruteforce(ZetaParams(4, 4, 5)) == 1);
}

TEST_CASE("n0 theorem matches enumeration on a small grid") {
  for (std::uint64_t p : {2, 3, 5, 7, 13, 17}) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      for (std::uint32_t m = 1; m <= 8; ++m) {
        const ZetaParams params(n, m, p);
        CHECK(n0_theorem(params) == n0_bruteforce(params));
        CHECK(n0_theorem(params) == n0_theorem(params.swapped()));
      }
    }
  }
}

TEST_CASE("singular_counts") {
  CHECK(singular_counts(0, 0, ZetaParams(3, 2, 5)) == ModPointCounts{5, 1});
  CHECK(singular_counts(2, 0, ZetaParams(3, 2, 5)) == ModPointCounts{5, 5});
  CHECK(singular_counts(0, 0, ZetaParams(1, 1, 3)) == ModPointCounts{3, 0});
  CHECK(singular_counts(0, 3, ZetaParams(3, 2, 5)) == ModPointCounts{5, 5});
  CHECK_THROWS_AS(singular_counts(1, 1, ZetaParams(3, 2, 5)), InvalidParams);

  const auto zeros = singular_zeros(0, 1, ZetaParams(3, 2, 5));
  REQUIRE(zeros.size() == 5);
  for (const auto& [x, y] : zeros) CHECK(x == 0);
}

TEST_CASE("count_Ne") {
  CHECK(count_ne(ZetaParams(3, 2, 2), 0) == 1);
  CHECK(count_ne(ZetaParams(3, 2, 2), 1) == 2);
  CHECK(count_ne(ZetaParams(1, 1, 3), 2) == 9);
  CHECK_THROWS_AS(count_ne(ZetaParams(2, 2, 5), 9), BudgetExceeded);
  CHECK_THROWS_AS(count_ne(ZetaParams(2, 2, 5), 3, 1000), BudgetExceeded);
  CHECK(count_ne(ZetaParams(2, 2, 5), 2, 625) > 0);
}

TEST_CASE("measure_coeffs") {
  CHECK(measure_coeffs(ZetaParams(2, 2, 5), 1)[0] == q(16, 25));
  CHECK(measure_coeffs(ZetaParams(1, 1, 3), 1)[0] == q(2, 3));
  CHECK_THROWS_AS(measure_coeffs(ZetaParams(2, 2, 5), 9), BudgetExceeded);

  const auto c = measure_coeffs(ZetaParams(2, 3, 3), 5);
  BigRational total = 0;
  for (const auto& x : c) {
    CHECK(x >= 0);
    total += x;
    CHECK(total <= 1);
  }
}

TEST_CASE("monomial_measure_coeffs") {
  CHECK(monomial_measure_coeffs(1, 5, 1)[0] == q(4, 5));
  CHECK(monomial_measure_coeffs(2, 3, 3) == qs({q(2, 3), 0, q(2, 9)}));
  CHECK(monomial_measure_coeffs(3, 2, 4)[1] == 0);
  CHECK_THROWS_AS(monomial_measure_coeffs(2, 3, 30), BudgetExceeded);
}

TEST_CASE("counting invariants") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      for (std::uint32_t m = 1; m <= 4; ++m) {
        const ZetaParams params(n, m, p);
        const std::uint32_t levels = p == 5 ? 4 : 5;
        const auto counts = count_ne_sequence(params, levels);
        const auto mirrored = count_ne_sequence(params.swapped(), levels);
        CHECK(counts == mirrored);
        CHECK(counts[0] == 1);
        for (std::uint32_t e = 1; e + 1 < levels; ++e) {
          CHECK(counts[e + 1] <= p * p * counts[e]);
          // |N_e| p^{-2e} is non-increasing
          CHECK(from_count(counts[e + 1]) * inverse_power(p, 2) <= from_count(counts[e]));
        }
        CHECK(singular_counts(0, 0, params) == singular_counts(0, 0, params.swapped()));
        CHECK(n0_bruteforce(params) == n0_bruteforce(params.swapped()));
      }
    }
  }
}

#include <doctest.h>

#include "helpers.hpp"
#include "igusa/series_bridge.hpp"
#include "igusa/zeta_closed.hpp"

using namespace igusa;
using igusa::test::poly;
using igusa::test::q;

TEST_CASE("zeta_to_poincare") {
  // x^1 in one variable has exactly one root mod p^e: P = sum p^{-e} t^e.
  CHECK(zeta_to_poincare(zeta_monomial(1, 5)) == RationalFunction(poly({1}), poly({1, q(-1, 5)})));
  CHECK(zeta_to_poincare(RationalFunction::constant(1)) == RationalFunction::constant(1));
  CHECK_THROWS_AS(zeta_to_poincare(RationalFunction(poly({1}), poly({1, 1}))), NotAZetaFunction);
}

TEST_CASE("poincare_to_zeta") {
  CHECK(poincare_to_zeta(RationalFunction(poly({1}), poly({1, q(-1, 5)}))) ==
        RationalFunction(poly({q(4, 5)}), poly({1, q(-1, 5)})));
  CHECK(poincare_to_zeta(RationalFunction::constant(1)) == RationalFunction::constant(1));
  CHECK_THROWS_AS(poincare_to_zeta(RationalFunction::constant(2)), NotAPoincareSeries);
  CHECK_THROWS_AS(poincare_to_zeta(RationalFunction(poly({1}), poly({0, 1}))), NotAPoincareSeries);
}

TEST_CASE("poincare_coeffs_oracle") {
  const auto c = poincare_coeffs_oracle(ZetaParams(3, 2, 2), 2);
  CHECK(c == std::vector<BigRational>{1, q(1, 2)});
  CHECK(poincare_coeffs_oracle(ZetaParams(1, 1, 3), 3)[2] == q(1, 9));
  CHECK_THROWS_AS(poincare_coeffs_oracle(ZetaParams(2, 2, 5), 10), BudgetExceeded);
}

TEST_CASE("bridge round trip and series agreement") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      for (std::uint32_t m = 1; m <= 4; ++m) {
        const ZetaParams params(n, m, p);
        if (params.p_divides_both()) continue;
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(p);
        const RationalFunction z = zeta_closed_form(params);
        const RationalFunction pser = zeta_to_poincare(z);
        CHECK(poincare_to_zeta(pser) == z);
        const std::uint32_t terms = p == 5 ? 4 : 5;
        CHECK(pser.taylor(terms) == poincare_coeffs_oracle(params, terms));
        CHECK(z.taylor(terms) == measure_coeffs(params, terms));
      }
    }
  }
}

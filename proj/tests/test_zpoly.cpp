#include "oddlen/errors.hpp"
#include "oddlen/zpoly.hpp"
#include "support.hpp"

#include <doctest.h>

#include <limits>
#include <sstream>

using namespace oddlen;

TEST_CASE("canonical form drops trailing zeros") {
  CHECK(P({1, 2, 0, 0}) == P({1, 2}));
  CHECK(P({0, 0}).is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK(P({3}).is_constant());
  CHECK(P({0, 0, 5}).leading() == 5);
  CHECK(P({1, -1}).coeff(7) == 0);
}

TEST_CASE("ring operations") {
  CHECK(one_minus(1) * (IntPoly(1) + IntPoly::x_pow(1)) == one_minus(2));
  CHECK(P({1, 1}) - P({1, 1}) == IntPoly{});
  CHECK(-P({1, -2}) == P({-1, 2}));
  CHECK(pow(P({1, 1}), 3) == P({1, 3, 3, 1}));
  CHECK(pow(P({2, 1}), 0) == IntPoly(1));
  CHECK(P({1, 2, 1}).eval(-1) == 0);
  IntPoly p;
  p.add_term(4, 3);
  p.add_term(-4, 3);
  CHECK(p.is_zero());
}

TEST_CASE("overflow is reported") {
  const auto big = std::numeric_limits<IntPoly::Coeff>::max();
  CHECK_THROWS_AS(IntPoly(big) + IntPoly(1), OverflowError);
  CHECK_THROWS_AS(IntPoly(big) * IntPoly(2), OverflowError);
  CHECK_THROWS_AS(-IntPoly(std::numeric_limits<IntPoly::Coeff>::min()), OverflowError);
}

TEST_CASE("exact division") {
  CHECK(exact_div(one_minus(6), one_minus(2)) == P({1, 0, 1, 0, 1}));
  CHECK(exact_div(IntPoly{}, P({1, 1})) == IntPoly{});
  CHECK_FALSE(try_exact_div(P({1, 0, 3}), P({1, 0, 1})).has_value());
  CHECK_THROWS_AS(exact_div(P({1, 0, 3}), P({1, 0, 1})), InexactDivision);
  CHECK_THROWS_AS(exact_div(P({1}), IntPoly{}), std::domain_error);
  // non-monic divisor
  CHECK(exact_div(P({2, 4, 2}), P({2, 2})) == P({1, 1}));
  CHECK_FALSE(try_exact_div(P({1, 1}), P({2})).has_value());
}

TEST_CASE("q-multinomials in x^2") {
  const std::vector<int> two_one{2, 1};
  // [3; 2, 1]_{x^2} = 1 + x^2 + x^4
  CHECK(q_multinomial(3, two_one, 2) == P({1, 0, 1, 0, 1}));
  const std::vector<int> two_two{2, 2};
  // [4; 2, 2]_q = 1 + q + 2q^2 + q^3 + q^4 at q = x
  CHECK(q_multinomial(4, two_two, 1) == P({1, 1, 2, 1, 1}));
  const std::vector<int> none;
  CHECK(q_multinomial(0, none, 2) == IntPoly(1));
  const std::vector<int> bad{1, 1};
  CHECK_THROWS(q_multinomial(3, bad, 2));
}

TEST_CASE("alternating products") {
  CHECK(alt_product(2, 1) == IntPoly(1));
  // factors 1 + (-1)^(j-1) x^floor(j/2)
  CHECK(alt_product(2, 3) == one_minus(2));
  CHECK(alt_product(3, 4, true) == pow(P({1, 1}) * one_minus(2), 2));
  CHECK(alt_product(4, 7) == one_minus(2) * P({1, 0, 1}) * one_minus(3) * P({1, 0, 0, 1}));
  // j = 1 contributes 2 and j = 0 contributes 0
  CHECK(alt_product(1, 1) == IntPoly(2));
  CHECK(alt_product(0, 2).is_zero());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == P({-1, 1}));
  CHECK(cyclotomic(4) == P({1, 0, 1}));
  CHECK(cyclotomic(6) == P({1, -1, 1}));
  CHECK(cyclotomic(12) == P({1, 0, -1, 0, 1}));
  CHECK(cyclotomic(15).degree() == 8);
  CHECK(euler_phi(36) == 12);
  for (int k = 1; k <= 40; ++k) {
    IntPoly prod(1);
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) prod *= cyclotomic(d);
    CHECK(prod == IntPoly::x_pow(k) - IntPoly(1));
  }
}

TEST_CASE("cyclotomic factorization") {
  auto f = cyclotomic_factorization(P({1, 0, 2, 0, 1}));
  REQUIRE(f.has_value());
  CHECK(f->sign == 1);
  CHECK(f->factors == std::vector<std::pair<int, int>>{{4, 2}});
  CHECK(to_string(*f) == "Phi_4^2");

  auto g = cyclotomic_factorization(one_minus(2));
  REQUIRE(g.has_value());
  CHECK(g->sign == -1);
  CHECK(to_string(*g) == "-Phi_1 * Phi_2");

  auto one = cyclotomic_factorization(IntPoly(1));
  REQUIRE(one.has_value());
  CHECK(one->factors.empty());
  CHECK(to_string(*one) == "1");

  CHECK_FALSE(is_cyclotomic_product(IntPoly(-1)));
  CHECK_FALSE(is_cyclotomic_product(IntPoly(2)));
  CHECK_FALSE(is_cyclotomic_product(IntPoly{}));
  CHECK_FALSE(is_cyclotomic_product(P({0, 1})));
  CHECK_FALSE(is_cyclotomic_product(P({2, 2})));
  CHECK_FALSE(is_cyclotomic_product(P({1, 0, 2, 0, -3})));
  CHECK(is_cyclotomic_product(pow(cyclotomic(9), 2) * cyclotomic(10) * one_minus(6)));
}

TEST_CASE("trinomials x^n + 2x^m + 1") {
  CHECK(trinomial(6, 2) == P({1, 0, 2, 0, 0, 0, 1}));
  CHECK_FALSE(trinomial_cyclotomic(6, 2));
  CHECK(trinomial_cyclotomic(6, 3));
  CHECK(is_cyclotomic_product(trinomial(6, 3)));
  CHECK_THROWS(trinomial(0, 2));
  for (int n = 2; n <= 14; ++n)
    for (int m = 1; m < n; ++m) CHECK(is_cyclotomic_product(trinomial(n, m)) == (n == 2 * m));
}

TEST_CASE("rendering") {
  CHECK(to_string(P({1, 0, -3, 0, 1})) == "1 - 3x^2 + x^4");
  CHECK(to_string(P({0, -1})) == "-x");
  CHECK(to_string(P({1, 0, -1, 0, 0, 2})) == "1 - x^2 + 2x^5");
  CHECK(to_string(IntPoly{}) == "0");
  std::ostringstream os;
  os << P({-2});
  CHECK(os.str() == "-2");
}

TEST_CASE("documented examples") {
  CHECK(P({1, 1}) * P({1, -1}) == one_minus(2));
  CHECK(P({1, 2}) + IntPoly{} == P({1, 2}));
  CHECK(one_minus(2) * P({1, 0, 1}) == one_minus(4));
  CHECK(exact_div(one_minus(4), one_minus(2)) == P({1, 0, 1}));
  CHECK(exact_div(P({1, 2}), IntPoly(1)) == P({1, 2}));
  CHECK(exact_div(P({1, 0, 3}) * P({1, 0, 1}), P({1, 0, 1})) == P({1, 0, 3}));
  const std::vector<int> one_one{1, 1}, one_two{1, 2}, three{3};
  CHECK(q_multinomial(2, one_one, 2) == P({1, 0, 1}));
  CHECK(q_multinomial(3, three, 5) == IntPoly(1));
  CHECK(q_multinomial(3, one_two, 1) == P({1, 1, 1}));
  CHECK(alt_product(2, 3) == one_minus(1) * P({1, 1}));
  CHECK(alt_product(6, 4) == IntPoly(1));
  CHECK(alt_product(4, 4, true) == P({1, 0, -2, 0, 1}));
  CHECK(cyclotomic(2) == P({1, 1}));
  CHECK(is_cyclotomic_product(P({1, 0, 2, 0, 1})));
  CHECK_FALSE(is_cyclotomic_product(P({1, 0, 2, 0, 0, 0, 1})));
  CHECK_FALSE(is_cyclotomic_product(P({1, 0, 3})));
  CHECK(is_cyclotomic_product(IntPoly(1)));
  CHECK(trinomial_cyclotomic(2, 1));
}

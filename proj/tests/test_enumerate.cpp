#include "oddlen/enumerate.hpp"
#include "oddlen/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace oddlen;

TEST_CASE("small descent tables") {
  const auto d2 = brute_table(Family::D, 2);
  REQUIRE(d2.buckets.size() == 4);
  CHECK(d2.buckets[0] == IntPoly(1));
  CHECK(d2.buckets[1] == P({0, -1}));
  CHECK(d2.buckets[2] == P({0, -1}));
  CHECK(d2.buckets[3] == P({0, 0, 1}));

  const auto b1 = brute_table(Family::B, 1);
  CHECK(b1.buckets[0] == IntPoly(1));
  CHECK(b1.buckets[1] == P({0, -1}));

  const auto d1 = brute_table(Family::D, 1);
  CHECK(d1.total() == IntPoly(1));
}

TEST_CASE("group orders and table totals") {
  CHECK(group_order(Family::A, 5) == 120);
  CHECK(group_order(Family::B, 4) == 384);
  CHECK(group_order(Family::D, 8) == 5160960);
  for (Family f : {Family::A, Family::B, Family::D})
    for (int n = 1; n <= 4; ++n) {
      std::int64_t count = 0;
      for_each_element(f, n, [&](const SignedPerm&) { ++count; });
      CHECK(count == group_order(f, n));
      // at x = 1 the signs cancel except in the trivial group
      CHECK(brute_table(f, n).total().eval(1) == (group_order(f, n) == 1 ? 1 : 0));
    }
}

TEST_CASE("serial and OpenMP kernels agree") {
  for (Family f : {Family::A, Family::B, Family::D})
    for (int n = 1; n <= (f == Family::A ? 7 : 5); ++n) {
      CHECK(brute_table_serial(f, n) == brute_table_parallel(f, n));
      CHECK(brute_table_serial(f, n) == brute_table_parallel(f, n, {}, 3));
    }
  const ElementFilter keep = [](const SignedPerm& s) { return s(1) > 0; };
  CHECK(brute_table_serial(Family::D, 5, keep) == brute_table_parallel(Family::D, 5, keep, 2));
  const Classifier by_sign = [](const SignedPerm& s) { return s(2) < 0 ? 1 : 0; };
  CHECK(brute_tables_serial(Family::B, 4, 2, by_sign) == brute_tables_parallel(Family::B, 4, 2, by_sign, 4));
}

TEST_CASE("classifier slots out of range are rejected") {
  const Classifier bad = [](const SignedPerm&) { return 5; };
  CHECK_THROWS(brute_tables_parallel(Family::A, 3, 2, bad));
  CHECK_THROWS(brute_tables_serial(Family::A, 3, 2, bad));
}

TEST_CASE("quotients") {
  const auto d3 = brute_table(Family::D, 3);
  CHECK(quotient_poly(d3, IndexSet::of(3, {0, 1, 2})) == IntPoly(1));
  CHECK(quotient_poly(d3, IndexSet::of(3, {1, 2})) == one_minus(2));
  CHECK(quotient_poly(d3, IndexSet::empty(3)) == P({1, 0, -2, 0, 1}));
  for (Family f : {Family::A, Family::B, Family::D}) {
    const auto t = brute_table(f, 4);
    const auto all = all_quotient_polys(t);
    for (std::uint32_t m = 0; m < 16; ++m) {
      if (f == Family::A && (m & 1u)) continue;
      CHECK(all[m] == quotient_poly(t, IndexSet(4, m)));
    }
  }
  CHECK(brute_quotient(Family::A, 3, IndexSet::empty(3)) == one_minus(2));
  CHECK(brute_quotient(Family::A, 4, IndexSet::of(4, {2})) == one_minus(2));
  CHECK(brute_quotient(Family::B, 2, IndexSet::empty(2)) == one_minus(1) * one_minus(2));
  CHECK(brute_quotient(Family::B, 3, IndexSet::of(3, {0, 2})) == one_minus(3));
  CHECK(brute_quotient(Family::A, 5, IndexSet::of(5, {1, 3})) == P({1, 0, 1}));
}

TEST_CASE("restricted sums") {
  CHECK(brute_filtered(Family::D, 4, IndexSet::empty(4), 4, 4) == pow(one_minus(2), 2));
  // block [3,3] with i = k, yet nonzero: label 0 also compares position 2,
  // which the cancelling swap moves
  CHECK(brute_filtered(Family::D, 4, IndexSet::of(4, {0, 3}), 3, -4) == P({0, 0, 0, 0, -1, 0, 1}));
  // sigma(1) = 4 cannot precede an ascent at label 1
  CHECK(brute_filtered(Family::D, 4, IndexSet::of(4, {1}), 1, 4).is_zero());
  CHECK_THROWS(brute_filtered(Family::D, 4, IndexSet::empty(4), 2, 3));
  const auto tables = position_tables(Family::D, 4);
  REQUIRE(tables.size() == 8);
  CHECK(quotient_poly(tables[static_cast<std::size_t>(position_slot(3, -4))], IndexSet::of(4, {0, 3})) ==
        P({0, 0, 0, 0, -1, 0, 1}));
  IntPoly sum;
  for (const auto& t : tables) sum += t.total();
  CHECK(sum == brute_table(Family::D, 4).total());
}

TEST_CASE("enumeration budget") {
  CHECK(enumeration_budget(Family::A) == 10);
  CHECK(enumeration_budget(Family::D) == 8);
  CHECK_THROWS_AS(check_budget(Family::D, 9), BudgetExceeded);
  CHECK_THROWS_AS(brute_table(Family::B, 9), BudgetExceeded);
  CHECK_THROWS_AS(check_budget(Family::A, 0), std::invalid_argument);
  CHECK_NOTHROW(check_budget(Family::A, 10));
}

#include "oddlen/chess.hpp"
#include "oddlen/enumerate.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace oddlen;

namespace {
bool has(const std::vector<Sandwich>& v, Sandwich s) { return std::find(v.begin(), v.end(), s) != v.end(); }
} // namespace

TEST_CASE("chessboard predicate") {
  CHECK(is_chessboard(SignedPerm::identity(5)));
  CHECK(chess_class(SignedPerm::identity(5)) == 0);
  CHECK_FALSE(is_chessboard(S({-1, -3, 2, 4})));
  CHECK_FALSE(is_chessboard(S({-2, -1, 3, 4})));
  CHECK(chess_class(S({2, 1, 4, 3})) == 1);
  CHECK_FALSE(chess_class(S({-1, -3, 2, 4})).has_value());
}

TEST_CASE("odd sandwiches") {
  CHECK(has(odd_sandwiches(S({-4, -3, 5, 2, -1, 6, -7}), 2), {3, 3}));
  CHECK(has(odd_sandwiches(S({-1, 5, 6, -3, -2, 7, -4}), 3), {2, 3}));
  for (int c = 1; c < 6; ++c) CHECK(odd_sandwiches(SignedPerm::identity(6), c).empty());
  const auto all = odd_sandwiches(S({-4, -3, 5, 2, -1, 6, -7}), 2);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& s : all) CHECK(s.h % 2 == 1);
  CHECK_THROWS(odd_sandwiches(SignedPerm::identity(4), 4));
  CHECK_THROWS(odd_sandwiches(SignedPerm::identity(4), 0));
}

TEST_CASE("k-odd sandwiches") {
  CHECK(has(k_odd_sandwiches(S({2, 3, -1, 7, 4, -6, 5}), 4), {3, 3}));
  CHECK(k_odd_sandwiches(SignedPerm::identity(6), 3).empty());
  CHECK(k_odd_sandwiches(S({1, 4, 2, 3}), 2).empty());
}

TEST_CASE("H and T membership") {
  for (int c = 1; c < 5; ++c) CHECK(in_H(SignedPerm::identity(5), c));
  for (int a = 1; a < 5; ++a) CHECK(in_T(SignedPerm::identity(5), a));
  CHECK_FALSE(in_H(S({-1, -3, 2, 4}), 1));
  CHECK_FALSE(in_T(S({-1, -3, 2, 4}), 2));
  // ascending chessboard elements have no odd sandwiches
  for_each_element(Family::D, 5, [](const SignedPerm& s) {
    auto v = s.one_line();
    if (is_chessboard(s) && std::is_sorted(v.begin(), v.end())) CHECK(in_H(s, 1));
  });
}

TEST_CASE("L additivity over the [n-1] factorization") {
  CHECK_FALSE(check_L_additivity(S({-1, -3, 2, 4})));
  CHECK(odd_length(S({-1, -3, 2, 4}), Family::D) == 3);
  CHECK(check_L_additivity(SignedPerm::identity(4)));
  for_each_element(Family::D, 5, [](const SignedPerm& s) {
    if (is_chessboard(s)) CHECK(check_L_additivity(s));
  });
}

TEST_CASE("support sums") {
  for (std::uint32_t m = 0; m < 16; ++m) {
    const IndexSet I(4, m);
    CHECK(support_sum(Family::D, 4, I, Support::chessboard()) == brute_quotient(Family::D, 4, I));
  }
  CHECK(support_sum(Family::D, 2, IndexSet::empty(2), Support::all()) == brute_quotient(Family::D, 2, IndexSet::empty(2)));
  const auto I = IndexSet::of(5, {0, 1, 2, 4});
  CHECK(support_sum(Family::D, 5, I, Support::H(4)) == brute_quotient(Family::D, 5, I));
  const auto J = IndexSet::of(6, {0, 1, 3, 4, 5});
  CHECK(support_sum(Family::D, 6, J, Support::T(2)) == brute_quotient(Family::D, 6, J));
  CHECK(support_sum(Family::D, 6, J.without(0), Support::T(2)) == brute_quotient(Family::D, 6, J.without(0)));
  CHECK_THROWS(support_sum(Family::A, 4, IndexSet::empty(4), Support::H(2)));
}

TEST_CASE("set factorizations") {
  auto h6 = check_set_factorization(6, IndexSet::of(6, {0, 1, 3, 4, 5}), FactorizationKind::H);
  CHECK_MESSAGE(h6.ok, h6.detail);
  auto h5 = check_set_factorization(5, IndexSet::of(5, {0, 1, 2, 4}), FactorizationKind::H);
  CHECK_MESSAGE(h5.ok, h5.detail);
  auto t7 = check_set_factorization(7, IndexSet::of(7, {0, 1, 2, 4, 5, 6}), FactorizationKind::T);
  CHECK_MESSAGE(t7.ok, t7.detail);
  CHECK_THROWS(check_set_factorization(6, IndexSet::of(6, {0, 1, 4}), FactorizationKind::H));
  CHECK_THROWS(check_set_factorization(6, IndexSet::of(6, {0, 1, 3, 4, 5}), FactorizationKind::T));
}

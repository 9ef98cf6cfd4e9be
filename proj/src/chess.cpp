#include "oddlen/chess.hpp"

#include "oddlen/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace oddlen {

bool is_chessboard(const SignedPerm& s) { return chess_class(s).has_value(); }

std::optional<int> chess_class(const SignedPerm& s) {
  const int j = ((1 + s(1)) % 2 + 2) % 2;
  for (int i = 2; i <= s.n(); ++i)
    if (((i + s(i)) % 2 + 2) % 2 != j) return std::nullopt;
  return j;
}

namespace {

// sign_of[v] = sign of the entry whose absolute value is v
std::array<int, kMaxRank + 2> value_signs(const SignedPerm& s) {
  std::array<int, kMaxRank + 2> sg{};
  for (int i = 1; i <= s.n(); ++i) sg[static_cast<std::size_t>(std::abs(s(i)))] = s(i) > 0 ? 1 : -1;
  return sg;
}

std::array<int, kMaxRank + 2> value_positions(const SignedPerm& s) {
  std::array<int, kMaxRank + 2> pos{};
  for (int i = 1; i <= s.n(); ++i) pos[static_cast<std::size_t>(std::abs(s(i)))] = i;
  return pos;
}

} // namespace

std::vector<Sandwich> odd_sandwiches(const SignedPerm& s, int c) {
  const int n = s.n();
  if (c < 1 || c > n - 1) throw std::invalid_argument("odd_sandwiches: c must lie in [1, n-1]");
  const auto sg = value_signs(s);
  std::array<bool, kMaxRank + 2> in_window{};
  int min_w = n + 1;
  for (int i = c; i <= n; ++i) {
    int a = std::abs(s(i));
    in_window[static_cast<std::size_t>(a)] = true;
    min_w = std::min(min_w, a);
  }

  std::vector<Sandwich> out;
  for (int r = 1; r <= n - 2; ++r) {
    if (!in_window[static_cast<std::size_t>(r)]) continue;
    for (int h = 1; h <= n - 2 && r + h + 1 <= n; h += 2) {
      const int top = r + h + 1;
      if (!in_window[static_cast<std::size_t>(top)]) continue;
      const int sr = sg[static_cast<std::size_t>(r)];
      const bool ends_agree = sr == sg[static_cast<std::size_t>(top)];
      bool all_opposite = true, all_same = true;
      for (int v = r + 1; v <= r + h; ++v) {
        if (!in_window[static_cast<std::size_t>(v)]) continue;
        if (sg[static_cast<std::size_t>(v)] == sr)
          all_opposite = false;
        else
          all_same = false;
      }
      const bool first = ends_agree && all_opposite;
      const bool second = r == min_w && !ends_agree && all_same;
      if (first || second) out.push_back({r, h});
    }
  }
  return out;
}

std::vector<Sandwich> k_odd_sandwiches(const SignedPerm& s, int k) {
  const int n = s.n();
  if (k < 1 || k > n - 1) throw std::invalid_argument("k_odd_sandwiches: k must lie in [1, n-1]");
  const auto pos = value_positions(s);
  std::vector<Sandwich> out;
  for (int r = 1; r <= n - 2; ++r) {
    if (pos[static_cast<std::size_t>(r)] > k) continue;
    for (int h = 1; h <= n - 2 && r + h + 1 <= n; h += 2) {
      if (pos[static_cast<std::size_t>(r + h + 1)] > k) continue;
      bool gap_after_k = true;
      for (int i = 1; i <= h && gap_after_k; ++i) gap_after_k = pos[static_cast<std::size_t>(r + i)] > k;
      if (gap_after_k) out.push_back({r, h});
    }
  }
  return out;
}

bool in_H(const SignedPerm& s, int c) { return is_chessboard(s) && odd_sandwiches(s, c).empty(); }

bool in_T(const SignedPerm& s, int a0) { return is_chessboard(s) && k_odd_sandwiches(s, a0).empty(); }

bool Support::admits(const SignedPerm& s) const {
  switch (kind) {
  case Kind::All: return true;
  case Kind::Chessboard: return is_chessboard(s);
  case Kind::H: return in_H(s, param);
  case Kind::T: return in_T(s, param);
  }
  return false;
}

IntPoly support_sum(Family f, int n, const IndexSet& I, const Support& support) {
  if ((support.kind == Support::Kind::H || support.kind == Support::Kind::T) && f != Family::D)
    throw std::invalid_argument("H and T supports are defined in type D");
  if (support.kind == Support::Kind::H || support.kind == Support::Kind::T)
    if (support.param < 1 || support.param > n - 1) throw std::invalid_argument("support parameter must lie in [1, n-1]");
  if (support.kind == Support::Kind::All) return brute_quotient(f, n, I);
  return brute_sum(f, n, I, [support](const SignedPerm& s) { return support.admits(s); });
}

bool check_L_additivity(const SignedPerm& s) {
  if (!s.in_even()) throw std::invalid_argument("check_L_additivity expects an element of D_n");
  const int n = s.n();
  auto [w, u] = parabolic_factorize(s, IndexSet::interval(n, 1, n - 1), Family::D);
  return odd_length(s, Family::D) == odd_length(w, Family::D) + odd_length(u, Family::D);
}

namespace {

using ElementList = std::vector<SignedPerm>;

void normalize(ElementList& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct Accumulator {
  std::ostringstream why;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) why << "; ";
    ok = false;
    why << what;
  }
};

FactorizationCheck compare_sides(const IndexSet& big, const IndexSet& J, const ElementList& left_set,
                                 const ElementList& right_set, const ElementList& source_set) {
  // source_set = elements on the big quotient; left/right are the claimed
  // images of the two parabolic projections
  Accumulator acc;
  ElementList proj_left, proj_right, product;
  for (const auto& s : source_set) {
    auto [w, u] = parabolic_factorize(s, J, Family::D);
    proj_left.push_back(w);
    proj_right.push_back(u);
  }
  normalize(proj_left);
  normalize(proj_right);
  for (const auto& w : left_set)
    for (const auto& u : right_set) product.push_back(w * u);
  const std::size_t raw = product.size();
  normalize(product);

  acc.require(proj_left == left_set, "left projections differ from the quotient set (" + std::to_string(proj_left.size()) +
                                         " vs " + std::to_string(left_set.size()) + ")");
  acc.require(proj_right == right_set, "right projections differ from the subgroup factor (" +
                                           std::to_string(proj_right.size()) + " vs " +
                                           std::to_string(right_set.size()) + ")");
  acc.require(product == source_set, "product set differs from " + to_string(big) + " side (" +
                                         std::to_string(product.size()) + " vs " + std::to_string(source_set.size()) + ")");
  acc.require(raw == product.size(), "product representation is not unique");
  FactorizationCheck out;
  out.ok = acc.ok;
  out.detail = acc.ok ? std::to_string(source_set.size()) + " = " + std::to_string(left_set.size()) + " x " +
                            std::to_string(right_set.size()) + " elements"
                      : acc.why.str();
  return out;
}

} // namespace

FactorizationCheck check_set_factorization(int n, const IndexSet& I, FactorizationKind kind) {
  if (I.n() != n) throw std::invalid_argument("index set rank does not match n");
  if (n > 7) throw std::invalid_argument("set factorization checks enumerate D_n and are limited to n <= 7");
  const int a0 = components(I).zero.size();
  if (a0 < 2 || a0 > n - 2) throw std::invalid_argument("set factorization requires |I_0| in [2, n-2]");

  if (kind == FactorizationKind::H) {
    if (!is_compressed(I) || !I.contains(n - 1))
      throw std::invalid_argument("H factorization requires a compressed set ending at n-1");
    const IndexSet J = IndexSet::interval(n, 0, a0 - 1) | IndexSet::interval(n, a0 + 1, n - 1);
    const IndexSet tail = IndexSet(n, I.mask() & ~IndexSet::interval(n, 0, a0 - 1).mask());
    const int c = a0 + 1;
    ElementList hI, hJ, sub;
    for_each_element(Family::D, n, [&](const SignedPerm& s) {
      if (in_H(s, c)) {
        if (in_quotient(s, I, Family::D)) hI.push_back(s);
        if (in_quotient(s, J, Family::D)) hJ.push_back(s);
      }
      bool fixes_head = true;
      for (int i = 1; i <= a0 && fixes_head; ++i) fixes_head = s(i) == i;
      if (fixes_head && s.in_symmetric() && is_chessboard(s) && in_quotient(s, tail, Family::A)) sub.push_back(s);
    });
    normalize(hI);
    normalize(hJ);
    normalize(sub);
    return compare_sides(I, J, hJ, sub, hI);
  }

  const IndexSet expected = IndexSet::interval(n, 0, a0 - 1) | IndexSet::interval(n, a0 + 1, n - 1);
  if (I != expected || a0 % 2 != 1 || n % 2 != 1)
    throw std::invalid_argument("T factorization requires I = [0,a0-1] u [a0+1,n-1] with a0 and n odd");
  const IndexSet Iminus = I.without(0);
  const IndexSet head = IndexSet::interval(n, 0, a0 - 1);
  ElementList tI, tIm, sub;
  for_each_element(Family::D, n, [&](const SignedPerm& s) {
    if (in_T(s, a0)) {
      if (in_quotient(s, I, Family::D)) tI.push_back(s);
      if (in_quotient(s, Iminus, Family::D)) tIm.push_back(s);
    }
    bool fixes_tail = true;
    for (int i = a0 + 1; i <= n && fixes_tail; ++i) fixes_tail = s(i) == i;
    if (!fixes_tail) return;
    std::vector<int> headv;
    for (int i = 1; i <= a0; ++i) headv.push_back(s(i));
    SignedPerm h(headv);
    bool ascending = true;
    for (int i = 1; i < a0 && ascending; ++i) ascending = h(i) < h(i + 1);
    if (ascending && is_chessboard(h)) sub.push_back(s);
  });
  normalize(tI);
  normalize(tIm);
  normalize(sub);
  return compare_sides(Iminus, head, tI, sub, tIm);
}

} // namespace oddlen

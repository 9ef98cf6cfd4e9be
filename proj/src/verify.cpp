#include "oddlen/verify.hpp"

#include "oddlen/chess.hpp"
#include "oddlen/enumerate.hpp"
#include "oddlen/errors.hpp"
#include "oddlen/genfun.hpp"
#include "oddlen/rootsys.hpp"
#include "oddlen/sperm.hpp"
#include "oddlen/zpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace oddlen {

Tier parse_tier(std::string_view text) {
  if (text == "fast") return Tier::Fast;
  if (text == "full") return Tier::Full;
  if (text == "extended") return Tier::Extended;
  throw std::invalid_argument("unknown tier '" + std::string(text) + "' (expected fast, full or extended)");
}

std::string to_string(Tier t) {
  switch (t) {
  case Tier::Fast: return "fast";
  case Tier::Full: return "full";
  case Tier::Extended: return "extended";
  }
  return "?";
}

int tier_n_max(Tier t, Family f) {
  const int step = t == Tier::Fast ? 0 : t == Tier::Full ? 1 : 2;
  return (f == Family::A ? 8 : 6) + step;
}

namespace {

IntPoly X(int e) { return IntPoly::x_pow(e); }
IntPoly one_plus(int e) { return IntPoly(1) + X(e); }

std::uint32_t bit(int i) { return 1u << i; }
std::uint32_t range_mask(int lo, int hi) {
  std::uint32_t m = 0;
  for (int i = lo; i <= hi; ++i) m |= bit(i);
  return m;
}

std::string mismatch(const IntPoly& lhs, const IntPoly& rhs) {
  return "lhs " + to_string(lhs) + " != rhs " + to_string(rhs);
}

// Accumulates the outcome of several comparisons behind one record.
struct Verdict {
  bool ok = true;
  int compared = 0;
  std::ostringstream why;

  void eq(const IntPoly& lhs, const IntPoly& rhs, const std::string& what) {
    ++compared;
    if (lhs == rhs) return;
    if (!ok) why << "; ";
    ok = false;
    why << what << ": " << mismatch(lhs, rhs);
  }
  void require(bool cond, const std::string& what) {
    ++compared;
    if (cond) return;
    if (!ok) why << "; ";
    ok = false;
    why << what;
  }
  std::string detail() const { return ok ? std::to_string(compared) + " comparisons" : why.str(); }
};

class Context {
public:
  Context(const SweepConfig& cfg, const RecordSink& sink, VerifySummary& summary)
      : cfg_(cfg), sink_(sink), summary_(summary) {}

  bool selected(Family f) const { return cfg_.families.count(f) != 0; }

  int n_max(Family f) const {
    int n = cfg_.n_override ? *cfg_.n_override : tier_n_max(cfg_.tier, f);
    return std::min(n, enumeration_budget(f));
  }
  int cap(Family f, int c) const { return std::min(n_max(f), c); }
  int formula_cap(int c) const { return cfg_.n_override ? std::min(*cfg_.n_override, c) : c; }

  const std::vector<IntPoly>& quotients(Family f, int n) {
    auto key = std::make_pair(f, n);
    auto it = quotients_.find(key);
    if (it == quotients_.end()) it = quotients_.emplace(key, all_quotient_polys(brute_table(f, n))).first;
    return it->second;
  }
  const IntPoly& q(Family f, int n, std::uint32_t mask) { return quotients(f, n)[mask]; }
  const IntPoly& qD(int n, std::uint32_t mask) { return q(Family::D, n, mask); }

  // Type D quotient sum over elements with sigma(b) == v.
  const IntPoly& restricted(int n, std::uint32_t mask, int b, int v) {
    auto it = positions_.find(n);
    if (it == positions_.end()) {
      std::vector<std::vector<IntPoly>> per_slot;
      for (const auto& t : position_tables(Family::D, n)) per_slot.push_back(all_quotient_polys(t));
      it = positions_.emplace(n, std::move(per_slot)).first;
    }
    return it->second[static_cast<std::size_t>(position_slot(b, v))][mask];
  }

  // Quotient arrays for a filtered table, cached under a caller-chosen tag.
  const std::vector<IntPoly>& filtered(const std::string& tag, Family f, int n, const ElementFilter& keep) {
    auto key = tag + "/" + to_string(f) + std::to_string(n);
    auto it = filtered_.find(key);
    if (it == filtered_.end()) it = filtered_.emplace(key, all_quotient_polys(brute_table(f, n, keep))).first;
    return it->second;
  }

  const std::vector<std::vector<IntPoly>>& classified(const std::string& tag, Family f, int n, int count,
                                                      const Classifier& classify) {
    auto key = tag + "/" + to_string(f) + std::to_string(n);
    auto it = classified_.find(key);
    if (it == classified_.end()) {
      std::vector<std::vector<IntPoly>> out;
      for (const auto& t : brute_tables_parallel(f, n, count, classify)) out.push_back(all_quotient_polys(t));
      it = classified_.emplace(key, std::move(out)).first;
    }
    return it->second;
  }

  void emit(const std::string& check, std::optional<Family> f, int n, std::optional<IndexSet> set, bool ok,
            std::string detail) {
    ++summary_.records;
    if (!ok) ++summary_.failures;
    sink_(CheckRecord{check, f, n, std::move(set), ok, std::move(detail)});
  }
  void emit(const std::string& check, std::optional<Family> f, int n, std::optional<IndexSet> set, const Verdict& v) {
    emit(check, f, n, std::move(set), v.ok, v.detail());
  }

private:
  const SweepConfig& cfg_;
  const RecordSink& sink_;
  VerifySummary& summary_;
  std::map<std::pair<Family, int>, std::vector<IntPoly>> quotients_;
  std::map<int, std::vector<std::vector<IntPoly>>> positions_;
  std::map<std::string, std::vector<IntPoly>> filtered_;
  std::map<std::string, std::vector<std::vector<IntPoly>>> classified_;
};

using CheckFn = void (*)(Context&, const std::string&);

struct CheckEntry {
  CheckInfo info;
  std::vector<Family> families;  // empty: family-free
  CheckFn run;
};

std::vector<Family> active(Context& ctx, std::initializer_list<Family> fs) {
  std::vector<Family> out;
  for (Family f : fs)
    if (ctx.selected(f)) out.push_back(f);
  return out;
}

std::uint32_t label_limit(int n) { return 1u << n; }
bool valid_for(Family f, std::uint32_t mask) { return f != Family::A || (mask & 1u) == 0; }

// ---- element-level checks -------------------------------------------------

void root_oracle(Context& ctx, const std::string& name) {
  for (Family f : active(ctx, {Family::A, Family::B, Family::D})) {
    const int top = ctx.cap(f, f == Family::A ? 7 : 6);
    for (int n = 1; n <= top; ++n) {
      const auto rs = build_root_system(f, n);
      Verdict v;
      std::int64_t count = 0;
      for_each_element(f, n, [&](const SignedPerm& s) {
        ++count;
        const int ell = length_via_roots(rs, s), odd = odd_length_via_roots(rs, s);
        if (ell != length(s, f) || odd != odd_length(s, f))
          v.require(false, to_string(s) + ": statistics (" + std::to_string(length(s, f)) + "," +
                               std::to_string(odd_length(s, f)) + ") vs roots (" + std::to_string(ell) + "," +
                               std::to_string(odd) + ")");
        if (length_via_roots(rs, s.inverse()) != ell) v.require(false, to_string(s) + ": length of inverse differs");
        if (f == Family::A && odd_length(s, Family::D) != odd_length(s, Family::A))
          v.require(false, to_string(s) + ": type D odd length differs on S_n");
      });
      ctx.emit(name, f, n, std::nullopt, v.ok, v.ok ? std::to_string(count) + " elements agree" : v.detail());
    }
  }
}

void descent_criterion(Context& ctx, const std::string& name) {
  for (Family f : active(ctx, {Family::A, Family::B, Family::D})) {
    for (int n = 1; n <= ctx.cap(f, 5); ++n) {
      const auto rs = build_root_system(f, n);
      std::vector<SignedPerm> gens;
      std::vector<int> labels;
      for (int i = first_generator(f); i < n; ++i) {
        if (f == Family::D && i == 0 && n < 2) continue;
        gens.push_back(generator(f, n, i));
        labels.push_back(i);
      }
      Verdict v;
      for_each_element(f, n, [&](const SignedPerm& s) {
        const int ell = length_via_roots(rs, s);
        std::uint32_t m = 0;
        for (std::size_t k = 0; k < gens.size(); ++k)
          if (length_via_roots(rs, s * gens[k]) < ell) m |= bit(labels[k]);
        if (m != descent_set(s, f).mask())
          v.require(false, to_string(s) + ": shortcut " + to_string(descent_set(s, f)) + " vs length drop " +
                               to_string(IndexSet(n, m)));
        else
          ++v.compared;
      });
      ctx.emit(name, f, n, std::nullopt, v);
    }
  }
}

void parabolic_check(Context& ctx, const std::string& name) {
  for (Family f : active(ctx, {Family::A, Family::B, Family::D})) {
    for (int n = 1; n <= ctx.cap(f, 5); ++n) {
      Verdict v;
      const auto id = SignedPerm::identity(n);
      for_each_element(f, n, [&](const SignedPerm& s) {
        for (std::uint32_t m = 0; m < label_limit(n); ++m) {
          if (!valid_for(f, m)) continue;
          const IndexSet J(n, m);
          auto [w, u] = parabolic_factorize(s, J, f);
          bool good = w * u == s && (descent_set(w, f).mask() & m) == 0 &&
                      length(s, f) == length(w, f) + length(u, f) && parabolic_factorize(u, J, f).first == id;
          if (good && f == Family::D && m == range_mask(1, n - 1)) {
            auto vals = s.one_line();
            std::sort(vals.begin(), vals.end());
            good = w.one_line() == vals;
          }
          if (!good) v.require(false, to_string(s) + " with J = " + to_string(J));
          else ++v.compared;
        }
      });
      ctx.emit(name, f, n, std::nullopt, v);
    }
  }
}

// ---- closed formulas against enumeration ----------------------------------

void formula_for(Context& ctx, const std::string& name, Family f) {
  if (!ctx.selected(f)) return;
  for (int n = 1; n <= ctx.n_max(f); ++n) {
    const auto& qs = ctx.quotients(f, n);
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      if (!valid_for(f, m)) continue;
      const IndexSet I(n, m);
      Verdict v;
      v.eq(closed_formula(f, n, I), qs[m], "closed vs enumeration");
      ctx.emit(name, f, n, I, v);
    }
  }
}

void formula_A(Context& ctx, const std::string& name) { formula_for(ctx, name, Family::A); }
void formula_B(Context& ctx, const std::string& name) { formula_for(ctx, name, Family::B); }
void formula_D(Context& ctx, const std::string& name) { formula_for(ctx, name, Family::D); }

// ---- index-set combinatorics ---------------------------------------------

void compression_map(Context& ctx, const std::string& name) {
  for (int n = 1; n <= ctx.formula_cap(10); ++n) {
    Verdict v;
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      const IndexSet C = compress(I);
      const auto ci = components(I), cc = components(C);
      bool good = compress(C) == C && is_compressed(C) && m_of(C) == m_of(I) && cc.zero.size() == ci.zero.size() &&
                  cc.others.size() == ci.others.size();
      for (std::size_t k = 0; good && k < ci.others.size(); ++k)
        good = (cc.others[k].size() + 1) / 2 == (ci.others[k].size() + 1) / 2;
      if (!good) v.require(false, to_string(I) + " -> " + to_string(C));
      else ++v.compared;
    }
    ctx.emit(name, std::nullopt, n, std::nullopt, v);
  }
}

// ---- shifting and compression identities (type D) -------------------------

void zero_one_swap(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 2; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      if (m & 3u) continue;  // I inside [2, n-1]
      Verdict v;
      v.eq(ctx.qD(n, m | 1u), ctx.qD(n, m | 2u), "enumeration");
      v.eq(closed_D(n, IndexSet(n, m | 1u)), closed_D(n, IndexSet(n, m | 2u)), "closed");
      ctx.emit(name, Family::D, n, IndexSet(n, m), v);
    }
  }
}

void component_shift(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 2; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      for (const auto& c : components(I).others) {
        const int i = c.lo, j = c.hi;  // j = i + 2k
        if (i < 3 || c.size() % 2 == 0 || j + 2 > n || I.contains(j + 2)) continue;
        const std::uint32_t shifted = (m & ~bit(i)) | bit(j + 1);
        const std::uint32_t both = m | shifted;
        Verdict v;
        v.eq(ctx.qD(n, m), ctx.qD(n, both), "I vs I u I~");
        v.eq(ctx.qD(n, m), ctx.qD(n, shifted), "I vs I~");
        for (int b = 1; b <= n; ++b) {
          if (b >= i && b <= j + 2) continue;
          for (int val : {n, -n}) {
            const std::string at = "sigma(" + std::to_string(b) + ")=" + std::to_string(val);
            v.eq(ctx.restricted(n, m, b, val), ctx.restricted(n, both, b, val), at + ", I vs I u I~");
            v.eq(ctx.restricted(n, m, b, val), ctx.restricted(n, shifted, b, val), at + ", I vs I~");
          }
        }
        ctx.emit(name, Family::D, n, I, v.ok, "component [" + std::to_string(i) + "," + std::to_string(j) + "]: " + v.detail());
      }
    }
  }
}

void even_zero_block(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 3; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      const int a0 = components(I).zero.size();
      if (a0 < 2 || a0 > n - 1 || a0 % 2 != 0 || I.contains(a0 + 1)) continue;
      const std::uint32_t grown = m | bit(a0);
      Verdict v;
      v.eq(ctx.qD(n, m), one_plus(a0) * ctx.qD(n, grown), "quotient");
      for (int b = a0 + 2; b <= n; ++b)
        for (int val : {n, -n})
          v.eq(ctx.restricted(n, m, b, val), one_plus(a0) * ctx.restricted(n, grown, b, val),
               "sigma(" + std::to_string(b) + ")=" + std::to_string(val));
      ctx.emit(name, Family::D, n, I, v);
    }
  }
}

void compression(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 2; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      const int a0 = components(I).zero.size();
      if (a0 < 2) continue;
      const IndexSet C = compress(I);
      Verdict v;
      v.eq(ctx.qD(n, m), ctx.qD(n, C.mask()), "quotient");
      v.eq(ctx.restricted(n, m, a0, n), ctx.restricted(n, C.mask(), a0, n), "sigma(a0)=n");
      v.eq(closed_D(n, I), closed_D(n, C), "closed");
      ctx.emit(name, Family::D, n, I, v);
    }
  }
}

void odd_block_top_value(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 4; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n - 1); ++m) {  // I inside [0, n-2]
      const IndexSet I(n, m);
      const int a0 = components(I).zero.size();
      if (a0 < 3 || a0 > n - 1 || a0 % 2 != 1 || !is_compressed(I)) continue;
      const IntPoly sign = IntPoly((n - 1) % 2 == 0 ? 2 : -2);
      Verdict v;
      v.eq(ctx.restricted(n, m, a0, n), sign * X(n / 2) * ctx.qD(n - 1, m), "sigma(a0)=n");
      ctx.emit(name, Family::D, n, I, v);
    }
  }
}

void top_value_vanishing(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 3; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      Verdict v;
      std::string positions;
      for (int a = 2; a <= n - 1; ++a) {
        if (I.contains(a + 1)) continue;
        if (a == 3 && (I.contains(0) || I.contains(1))) continue;
        if (a >= 4 && I.contains(a - 2)) continue;
        positions += (positions.empty() ? "" : ",") + std::to_string(a);
        for (int val : {n, -n})
          v.eq(ctx.restricted(n, m, a, val), IntPoly{}, "sigma(" + std::to_string(a) + ")=" + std::to_string(val));
      }
      if (positions.empty()) continue;
      ctx.emit(name, Family::D, n, I, v.ok, "a in {" + positions + "}: " + v.detail());
    }
  }
}

void component_top_value(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 3; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      for (const auto& c : components(I).others) {
        const int i = c.lo, k = c.hi;
        const bool same_parity = (k - i) % 2 == 0;
        // Slot 0: sigma(i) = -n and sigma(k+1) < sigma(i-1).
        // Slot 1: sigma(k+1) = n and sigma(k+2) < sigma(i).
        const auto& side = ctx.classified("top-value-" + std::to_string(i) + "-" + std::to_string(k), Family::D, n, 2,
                                          [=](const SignedPerm& s) {
                                            if (i >= 2 && s(i) == -n && s(k + 1) < s(i - 1)) return 0;
                                            if (k <= n - 2 && s(k + 1) == n && s(k + 2) < s(i)) return 1;
                                            return -1;
                                          });
        // The pairings move entries next to the block, so the labels that
        // compare those positions (i-2, and 0 when it reaches position 2)
        // must stay outside I. Without this the identities fail, e.g. at
        // n = 4, I = {0,3}.
        const bool left_free = !I.contains(i - 2) && !(i == 3 && I.contains(0));
        const bool right_free = !(i == 2 && I.contains(0));
        Verdict v;
        if (i >= 2 && left_free)
          v.eq(ctx.restricted(n, m, i, -n), same_parity ? IntPoly{} : side[0][m], "sigma(i)=-n");
        if (k <= n - 2 && !I.contains(k + 2) && right_free)
          v.eq(ctx.restricted(n, m, k + 1, n), same_parity ? IntPoly{} : side[1][m], "sigma(k+1)=n");
        if (v.compared == 0) continue;
        ctx.emit(name, Family::D, n, I, v.ok,
                 "component [" + std::to_string(i) + "," + std::to_string(k) + "]: " + v.detail());
      }
    }
  }
}

void odd_block_reduction(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 3; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      const int a0 = components(I).zero.size();
      if (a0 < 2 || a0 % 2 != 1) continue;
      const IndexSet J = compress(I);
      const int mj = m_of(J);
      const int small = 2 * mj - 1;
      Verdict v;
      v.eq(ctx.qD(n, m), ctx.qD(small, J.mask()) * alt_product(2 * mj, n, true), "reduction");
      ctx.emit(name, Family::D, n, I, v);
    }
  }
}

void even_block_reduction(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 3; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      const int a0 = components(I).zero.size();
      if (a0 < 2 || a0 % 2 != 0) continue;
      const IndexSet C = compress(I);
      const auto cc = components(C);
      const int a_s = cc.others.empty() ? a0 : cc.others.back().hi + 1;
      if (a_s > n - 1) continue;
      // Grow I_0 by one and push every other block one place right.
      std::uint32_t jm = range_mask(0, a0);
      for (const auto& c : cc.others) jm |= range_mask(c.lo + 1, c.hi + 1);
      const IndexSet J(n, jm);
      const int mj = m_of(J);
      const int small = 2 * mj - 1;
      Verdict v;
      v.eq(ctx.qD(n, m), one_plus(a0) * ctx.qD(small, jm) * alt_product(2 * mj, n, true), "reduction");
      ctx.emit(name, Family::D, n, I, v.ok, "J = " + to_string(J) + ": " + v.detail());
    }
  }
}

// ---- chessboard elements and sandwiches -----------------------------------

void chessboard_support(Context& ctx, const std::string& name) {
  for (Family f : active(ctx, {Family::A, Family::D})) {
    for (int n = 1; n <= ctx.cap(f, 6); ++n) {
      const auto& restricted = ctx.filtered("chessboard", f, n, [](const SignedPerm& s) { return is_chessboard(s); });
      const auto& all = ctx.quotients(f, n);
      for (std::uint32_t m = 0; m < label_limit(n); ++m) {
        if (!valid_for(f, m)) continue;
        Verdict v;
        v.eq(restricted[m], all[m], "chessboard sum vs quotient");
        ctx.emit(name, f, n, IndexSet(n, m), v);
      }
    }
  }
}

void chessboard_additivity(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 1; n <= ctx.cap(Family::D, 7); ++n) {
    Verdict v;
    std::int64_t chess = 0, other_fail = 0;
    for_each_element(Family::D, n, [&](const SignedPerm& s) {
      const bool add = check_L_additivity(s);
      if (is_chessboard(s)) {
        ++chess;
        if (!add) v.require(false, to_string(s));
        else ++v.compared;
      } else if (!add) {
        ++other_fail;
      }
    });
    ctx.emit(name, Family::D, n, std::nullopt, v.ok,
             v.ok ? std::to_string(chess) + " chessboard elements additive; " + std::to_string(other_fail) +
                        " non-chessboard elements are not"
                  : v.detail());
  }
}

void sandwich_parity(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 2; n <= ctx.cap(Family::D, 6); ++n) {
    Verdict v;
    for_each_element(Family::D, n, [&](const SignedPerm& s) {
      for (int c = 1; c <= n - 1; ++c) {
        bool ascending = true;
        for (int i = c; i < n && ascending; ++i) ascending = s(i) < s(i + 1);
        if (!ascending) continue;
        bool alternating = true;
        for (int i = c; i < n && alternating; ++i) alternating = ((s(i) - s(i + 1)) % 2 + 2) % 2 == 1;
        if (odd_sandwiches(s, c).empty() != alternating)
          v.require(false, to_string(s) + " c=" + std::to_string(c));
        else
          ++v.compared;
      }
    });
    ctx.emit(name, Family::D, n, std::nullopt, v);
  }
}

void sandwich_support(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 4; n <= ctx.cap(Family::D, 6); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      const int a0 = components(I).zero.size();
      if (a0 < 2 || a0 > n - 2) continue;
      const int c = a0 + 1;
      const auto& h = ctx.filtered("H" + std::to_string(c), Family::D, n, [c](const SignedPerm& s) { return in_H(s, c); });
      Verdict v;
      v.eq(h[m], ctx.qD(n, m), "H sum vs quotient");
      ctx.emit(name, Family::D, n, I, v);
    }
  }
}

void sandwich_factorization(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 4; n <= ctx.cap(Family::D, 7); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      const int a0 = components(I).zero.size();
      if (a0 < 2 || a0 > n - 2) continue;
      if (is_compressed(I) && I.contains(n - 1)) {
        auto r = check_set_factorization(n, I, FactorizationKind::H);
        ctx.emit(name, Family::D, n, I, r.ok, "H decomposition: " + r.detail);
      }
      const std::uint32_t two_block = range_mask(0, a0 - 1) | range_mask(a0 + 1, n - 1);
      if (m == two_block && a0 % 2 == 1 && n % 2 == 1) {
        auto r = check_set_factorization(n, I, FactorizationKind::T);
        ctx.emit(name, Family::D, n, I, r.ok, "T decomposition: " + r.detail);
      }
    }
  }
}

void multinomial_split(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 4; n <= ctx.cap(Family::D, 7); ++n) {
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      const auto cd = components(I);
      const int a0 = cd.zero.size();
      if (a0 < 2 || a0 > n - 2 || !is_compressed(I) || !I.contains(n - 1)) continue;
      std::vector<int> parts;
      for (const auto& c : cd.others) parts.push_back((c.size() + 1) / 2);
      const std::uint32_t jm = range_mask(0, a0 - 1) | range_mask(a0 + 1, n - 1);
      Verdict v;
      v.eq(ctx.qD(n, m), q_multinomial((n - a0) / 2, parts, 2) * ctx.qD(n, jm), "split");
      ctx.emit(name, Family::D, n, I, v);
    }
  }
}

// ---- product formulas in the [n-1] and two-block cases ---------------------

void ascending_quotient(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 1; n <= ctx.n_max(Family::D); ++n) {
    const IndexSet I = IndexSet::interval(n, 1, n - 1);
    Verdict v;
    v.eq(ctx.qD(n, I.mask()), alt_product(2, n), "product");
    ctx.emit(name, Family::D, n, I, v);
  }
}

void type_a_factorization(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 1; n <= ctx.n_max(Family::D); ++n) {
    const std::uint32_t top = range_mask(1, n - 1);
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      if (m & 1u) continue;
      const IndexSet I(n, m);
      Verdict v;
      v.eq(ctx.qD(n, m), ctx.qD(n, top) * ctx.q(Family::A, n, m), "D^[n-1] times S^I");
      v.eq(ctx.qD(n, m), c_poly(I) * alt_product(2, n) * alt_product(2 * m_of(I) + 2, n), "product");
      ctx.emit(name, Family::D, n, I, v);
    }
  }
}

void k_sandwich_support(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 4; n <= ctx.cap(Family::D, 7); ++n) {
    for (int a0 = 2; a0 <= n - 2; ++a0) {
      const std::uint32_t m = range_mask(0, a0 - 1) | range_mask(a0 + 1, n - 1);
      const auto& t = ctx.filtered("T" + std::to_string(a0), Family::D, n, [a0](const SignedPerm& s) { return in_T(s, a0); });
      for (std::uint32_t jm : {m, m & ~1u}) {
        Verdict v;
        v.eq(t[jm], ctx.qD(n, jm), "T sum vs quotient");
        ctx.emit(name, Family::D, n, IndexSet(n, jm), v);
      }
    }
  }
}

void odd_two_block(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 5; n <= ctx.n_max(Family::D); n += 2) {
    for (int a0 = 3; a0 <= n - 2; a0 += 2) {
      const std::uint32_t m = range_mask(0, a0 - 1) | range_mask(a0 + 1, n - 1);
      const std::vector<int> parts{(a0 - 1) / 2, (n - a0) / 2};
      Verdict v;
      v.eq(ctx.qD(n, m), q_multinomial((n - 1) / 2, parts, 2) * alt_product(a0 + 1, n), "product");
      ctx.emit(name, Family::D, n, IndexSet(n, m), v);
    }
  }
}

void even_recurrence(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n : {4, 6, 8}) {
    if (n > ctx.n_max(Family::D)) break;
    for (int a0 = 2; a0 <= n - 2; a0 += 2) {
      const std::uint32_t m = range_mask(0, a0 - 1) | range_mask(a0 + 1, n - 1);
      const std::uint32_t left = range_mask(0, a0 - 2) | range_mask(a0, n - 2);
      const std::uint32_t right = range_mask(0, a0) | range_mask(a0 + 2, n - 2);
      const IntPoly coeff = one_plus(a0) - IntPoly::monomial(2, a0 + n / 2);
      Verdict v;
      v.eq(ctx.qD(n, m), X(n - a0) * ctx.qD(n - 1, left) + coeff * ctx.qD(n - 1, right), "recurrence");
      ctx.emit(name, Family::D, n, IndexSet(n, m), v);
    }
  }
}

void even_two_block(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 4; n <= ctx.n_max(Family::D); n += 2) {
    for (int a0 = 2; a0 <= n - 2; a0 += 2) {
      const IndexSet I(n, range_mask(0, a0 - 1) | range_mask(a0 + 1, n - 1));
      const IntPoly num = c_poly(I) * (one_plus(a0) + IntPoly::monomial(2, n / 2)) * alt_product(a0 + 2, n);
      Verdict v;
      v.eq(ctx.qD(n, I.mask()), exact_div(num, one_plus(n / 2)), "product");
      ctx.emit(name, Family::D, n, I, v);
    }
  }
}

// ---- derived quantities and cyclotomic questions -------------------------

void m_values(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  struct Known {
    int n;
    std::vector<int> set;
    IntPoly value;
  };
  const IntPoly a = IntPoly(1) - X(2), b = IntPoly(1) - X(3), c = IntPoly(1) - X(4), d = IntPoly(1) - X(6);
  const std::vector<Known> known{{4, {0, 2}, pow(a, 3)}, {4, {0, 3}, a * c}, {6, {0, 2, 3, 5}, b * c * d},
                                 {6, {0, 2, 4, 5}, pow(b, 2) * pow(c, 2)}};
  for (const auto& k : known) {
    const IndexSet I = IndexSet::of(k.n, k.set);
    Verdict v;
    v.eq(M_of(k.n, I), k.value, "known value");
    ctx.emit(name, Family::D, k.n, I, v);
  }
  for (int n = 3; n <= ctx.formula_cap(7); ++n) {
    Verdict v;
    for (std::uint32_t m = 0; m < label_limit(n); ++m) {
      const IndexSet I(n, m);
      const IntPoly square = alt_product(2 * m_of(I) + 2, n, true);
      try {
        v.eq(M_of(n, I) * square, closed_D(n, I), to_string(I) + " closed");
      } catch (const InexactDivision& e) {
        v.require(false, to_string(I) + ": " + e.what());
      }
      if (n <= ctx.n_max(Family::D)) v.require(try_exact_div(ctx.qD(n, m), square).has_value(), to_string(I) + " enumeration");
    }
    ctx.emit(name, Family::D, n, std::nullopt, v);
  }
}

void conjecture_products(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 5; n <= ctx.formula_cap(8); ++n) {
    for (int i = 3; i <= n - 1; ++i) {
      for (auto variant : {ConjectureVariant::ZeroI, ConjectureVariant::ZeroOneI}) {
        const IndexSet I = variant == ConjectureVariant::ZeroI ? IndexSet::of(n, {0, i}) : IndexSet::of(n, {0, 1, i});
        const IntPoly rhs = conjecture_formulas(n, i, variant);
        Verdict v;
        v.eq(closed_D(n, I), rhs, "closed");
        if (n <= ctx.n_max(Family::D)) v.eq(ctx.qD(n, I.mask()), rhs, "enumeration");
        ctx.emit(name, Family::D, n, I, v);
      }
    }
  }
}

void cyclotomic_classification(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 2; n <= ctx.formula_cap(8); ++n) {
    for (std::uint32_t m = 0; m + 1 < label_limit(n); ++m) {  // proper subsets
      const IndexSet I(n, m);
      const IntPoly p = closed_D(n, I);
      const bool cond = noncyclotomic_condition(I);
      Verdict v;
      v.require(is_cyclotomic_product(p) == !cond,
                std::string(cond ? "expected non-cyclotomic" : "expected a cyclotomic product") + ", got " + to_string(p));
      if (cond) v.eq(noncyclotomic_form(n, I), p, "displayed form");
      if (n <= ctx.n_max(Family::D))
        v.require(is_cyclotomic_product(ctx.qD(n, m)) == !cond, "enumerated polynomial classified differently");
      ctx.emit(name, Family::D, n, I, v.ok, std::string(cond ? "non-cyclotomic" : "cyclotomic") + "; " + v.detail());
    }
  }
}

void trinomial_criterion(Context& ctx, const std::string& name) {
  for (int n = 2; n <= 24; ++n) {
    Verdict v;
    for (int m = 1; m < n; ++m)
      v.require(trinomial_cyclotomic(n, m) == is_cyclotomic_product(trinomial(n, m)),
                "x^" + std::to_string(n) + " + 2x^" + std::to_string(m) + " + 1");
    ctx.emit(name, std::nullopt, n, std::nullopt, v);
  }
}

void cyclotomic_divisor_product(Context& ctx, const std::string& name) {
  Verdict v;
  for (int k = 1; k <= 60; ++k) {
    IntPoly prod(1);
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) prod *= cyclotomic(d);
    v.eq(prod, X(k) - IntPoly(1), "k = " + std::to_string(k));
    v.require(cyclotomic(k).degree() == euler_phi(k), "degree of Phi_" + std::to_string(k));
  }
  ctx.emit(name, std::nullopt, 60, std::nullopt, v);
}

void chessboard_subgroup(Context& ctx, const std::string& name) {
  if (!ctx.selected(Family::D)) return;
  for (int n = 1; n <= ctx.cap(Family::D, 5); ++n) {
    std::vector<SignedPerm> all, zero;
    for_each_element(Family::D, n, [&](const SignedPerm& s) {
      if (auto c = chess_class(s)) {
        all.push_back(s);
        if (*c == 0) zero.push_back(s);
      }
    });
    auto closed_under = [](const std::vector<SignedPerm>& g) {
      for (const auto& a : g) {
        if (std::find(g.begin(), g.end(), a.inverse()) == g.end()) return false;
        for (const auto& b : g)
          if (!std::binary_search(g.begin(), g.end(), a * b)) return false;
      }
      return true;
    };
    std::sort(all.begin(), all.end());
    std::sort(zero.begin(), zero.end());
    Verdict v;
    v.require(closed_under(all), "chessboard elements not closed");
    v.require(closed_under(zero), "class-0 chessboard elements not closed");
    if (n % 2 == 1) v.require(all.size() == zero.size(), "odd n has class-1 chessboard elements");
    ctx.emit(name, Family::D, n, std::nullopt, v.ok,
             v.ok ? std::to_string(all.size()) + " chessboard elements, " + std::to_string(zero.size()) + " of class 0"
                  : v.detail());
  }
}

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> r{
      {{"root-oracle", "statistics agree with positive-root counts"}, {Family::A, Family::B, Family::D}, root_oracle},
      {{"descent-criterion", "descent shortcuts agree with the length-drop criterion"},
       {Family::A, Family::B, Family::D},
       descent_criterion},
      {{"parabolic-factorization", "recomposition, length additivity, ascending [n-1] representatives"},
       {Family::A, Family::B, Family::D},
       parabolic_check},
      {{"formula-A", "type A product formula against enumeration"}, {Family::A}, formula_A},
      {{"formula-B", "type B product formula against enumeration"}, {Family::B}, formula_B},
      {{"formula-D", "type D product formula against enumeration"}, {Family::D}, formula_D},
      {{"compression-map", "compression is idempotent and preserves m and |I_0|"}, {}, compression_map},
      {{"zero-one-swap", "D^{I+0} = D^{I+1} for I inside [2, n-1]"}, {Family::D}, zero_one_swap},
      {{"component-shift", "odd blocks away from 0 shift right by one"}, {Family::D}, component_shift},
      {{"even-zero-block", "even I_0 absorbs a0 at the cost of 1 + x^a0"}, {Family::D}, even_zero_block},
      {{"compression", "D^I = D^C(I) when |I_0| >= 2"}, {Family::D}, compression},
      {{"odd-block-top-value", "sigma(a0) = n sum for odd compressed I_0"}, {Family::D}, odd_block_top_value},
      {{"top-value-vanishing", "sigma(a) = +-n sums vanish"}, {Family::D}, top_value_vanishing},
      {{"component-top-value", "+-n at a block boundary"}, {Family::D}, component_top_value},
      {{"odd-block-reduction", "odd |I_0| reduces to rank 2m - 1"}, {Family::D}, odd_block_reduction},
      {{"even-block-reduction", "even |I_0| reduces to rank 2m - 1"}, {Family::D}, even_block_reduction},
      {{"chessboard-support", "quotient sums live on chessboard elements"}, {Family::A, Family::D}, chessboard_support},
      {{"chessboard-additivity", "odd length is additive over the [n-1] factorization of chessboard elements"},
       {Family::D},
       chessboard_additivity},
      {{"sandwich-parity", "ascending suffix has no odd sandwich iff parities alternate"}, {Family::D}, sandwich_parity},
      {{"sandwich-support", "quotient sums live on H_{n,a0+1}"}, {Family::D}, sandwich_support},
      {{"sandwich-factorization", "H and T sets factor through the parabolic decomposition"},
       {Family::D},
       sandwich_factorization},
      {{"multinomial-split", "compressed sets ending at n-1 split off an x^2-multinomial"}, {Family::D}, multinomial_split},
      {{"ascending-quotient", "D^[n-1] product"}, {Family::D}, ascending_quotient},
      {{"type-a-factorization", "D^I = D^[n-1] S^I for I inside [n-1]"}, {Family::D}, type_a_factorization},
      {{"k-sandwich-support", "two-block quotient sums live on T_n"}, {Family::D}, k_sandwich_support},
      {{"odd-two-block", "two-block product with a0 and n odd"}, {Family::D}, odd_two_block},
      {{"even-recurrence", "three-term recurrence with a0 and n even"}, {Family::D}, even_recurrence},
      {{"even-two-block", "two-block product with a0 and n even"}, {Family::D}, even_two_block},
      {{"m-values", "M_I divides exactly; known values"}, {Family::D}, m_values},
      {{"conjecture-products", "D^{0,i} and D^{0,1,i} products"}, {Family::D}, conjecture_products},
      {{"cyclotomic-classification", "non-cyclotomic quotients are exactly the alternating-cover sets"},
       {Family::D},
       cyclotomic_classification},
      {{"trinomial-criterion", "x^n + 2x^m + 1 is cyclotomic iff n = 2m"}, {}, trinomial_criterion},
      {{"cyclotomic-divisor-product", "prod_{d|k} Phi_d = x^k - 1"}, {}, cyclotomic_divisor_product},
      {{"chessboard-subgroup", "chessboard elements form a subgroup"}, {Family::D}, chessboard_subgroup},
  };
  return r;
}

} // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> c = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return c;
}

void validate_check_names(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    bool known = std::any_of(registry().begin(), registry().end(), [&](const CheckEntry& e) { return e.info.name == n; });
    if (!known) throw std::invalid_argument("unknown check '" + n + "'");
  }
}

VerifySummary run_verify(const SweepConfig& config, const RecordSink& sink) {
  validate_check_names(config.only);
  if (config.n_override && *config.n_override < 1) throw std::invalid_argument("n must be at least 1");
  for (Family f : config.families)
    if (config.n_override && *config.n_override > enumeration_budget(f))
      throw BudgetExceeded("requested n = " + std::to_string(*config.n_override) + " exceeds the type " + to_string(f) +
                           " enumeration budget of " + std::to_string(enumeration_budget(f)));
  VerifySummary summary;
  Context ctx(config, sink, summary);
  for (const auto& e : registry()) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), e.info.name) == config.only.end())
      continue;
    if (!e.families.empty() &&
        std::none_of(e.families.begin(), e.families.end(), [&](Family f) { return config.families.count(f); }))
      continue;
    e.run(ctx, e.info.name);
  }
  return summary;
}

} // namespace oddlen

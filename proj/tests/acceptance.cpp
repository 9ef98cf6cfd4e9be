// One line per acceptance criterion; exit status 1 if any line fails.
#include "oddlen/chess.hpp"
#include "oddlen/enumerate.hpp"
#include "oddlen/genfun.hpp"
#include "oddlen/rootsys.hpp"
#include "oddlen/sperm.hpp"
#include "oddlen/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace oddlen;

namespace {

IntPoly P(std::vector<IntPoly::Coeff> cs) { return IntPoly(std::move(cs)); }
IntPoly one_minus(int k) { return IntPoly(1) - IntPoly::x_pow(k); }
SignedPerm S(std::vector<int> v) { return SignedPerm(v); }

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& what, double bound_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (bound_s > 0 && s >= bound_s) o.fail("over the time bound");
  if (!o.ok) ++failures;
  std::printf("criterion %2d: %s  %-58s %8.2fs", id, o.ok ? "PASS" : "FAIL", what.c_str(), s);
  if (bound_s > 0) std::printf(" (< %gs)", bound_s);
  if (!o.note.empty()) std::printf("  %s", o.note.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

void formula_sweep(Outcome& o, Family f, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    const auto all = all_quotient_polys(brute_table(f, n));
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (f == Family::A && (m & 1u)) continue;
      const IndexSet I(n, m);
      if (closed_formula(f, n, I) != all[m]) o.fail(to_string(f) + std::to_string(n) + " " + to_string(I));
    }
  }
}

void run_checks(Outcome& o, const std::vector<std::string>& names, Tier tier, std::set<Family> families) {
  SweepConfig cfg;
  cfg.tier = tier;
  cfg.families = std::move(families);
  cfg.only = names;
  std::set<std::string> seen;
  run_verify(cfg, [&](const CheckRecord& r) {
    seen.insert(r.check);
    if (!r.ok) o.fail(r.check + " n=" + std::to_string(r.n) + (r.set ? " " + to_string(*r.set) : "") + ": " + r.detail);
  });
  for (const auto& n : names)
    if (!seen.count(n)) o.fail(n + " produced no records");
}

} // namespace

int main() {
  const int default_threads = omp_get_max_threads();

  criterion(1, "statistics agree with root counts (D n<=6, S_n n<=7)", 30, [](Outcome& o) {
    for (auto [f, top] : {std::pair{Family::D, 6}, std::pair{Family::A, 7}})
      for (int n = 1; n <= top; ++n) {
        const auto rs = build_root_system(f, n);
        for_each_element(f, n, [&](const SignedPerm& s) {
          if (length_via_roots(rs, s) != length(s, f) || odd_length_via_roots(rs, s) != odd_length(s, f))
            o.fail(to_string(s));
        });
      }
  });

  criterion(2, "point values", 0, [](Outcome& o) {
    const auto s = S({3, -2, 5, 1, -4});
    if (length(s, Family::D) != 11 || odd_length(s, Family::D) != 7) o.fail("(l, L) of 3 -2 5 1 -4");
    const auto t = S({-1, -3, 2, 4});
    auto [w, u] = parabolic_factorize(t, IndexSet::interval(4, 1, 3), Family::D);
    if (odd_length(t, Family::D) != 3 || odd_length(w, Family::D) != 1 || odd_length(u, Family::D) != 1 ||
        check_L_additivity(t))
      o.fail("L additivity of -1 -3 2 4");
    if (direct_product(S({1, 2}), S({3, 4, -2, -1})) != S({1, 2, 5, 6, -4, -3})) o.fail("12 x 34-2-1");
    const auto J = IndexSet::of(5, {0, 1, 2});
    if (parabolic_factorize(S({-5, -2, 1, -4, -3}), J, Family::D) !=
        std::pair{S({1, 2, 5, -4, -3}), S({-3, -2, 1, 4, 5})})
      o.fail("factorization of -5 -2 1 -4 -3");
    if (parabolic_factorize(S({-5, -2, -1, 4, -3}), J, Family::D) !=
        std::pair{S({-1, 2, 5, 4, -3}), S({-3, -2, 1, 4, 5})})
      o.fail("factorization of -5 -2 -1 4 -3");
  });

  criterion(3, "type A product formula, n<=8", 10, [](Outcome& o) { formula_sweep(o, Family::A, 8); });
  criterion(4, "type B product formula, n<=6", 60, [](Outcome& o) { formula_sweep(o, Family::B, 6); });

  omp_set_num_threads(1);
  criterion(5, "type D product formula, n<=7, one worker", 60, [](Outcome& o) { formula_sweep(o, Family::D, 7); });
  omp_set_num_threads(default_threads);
  criterion(5, "type D product formula, n=8, workers: " + std::to_string(default_threads), 600, [](Outcome& o) {
    const auto all = all_quotient_polys(brute_table(Family::D, 8));
    for (std::uint32_t m = 0; m < 256; ++m)
      if (closed_D(8, IndexSet(8, m)) != all[m]) o.fail(to_string(IndexSet(8, m)));
  });

  criterion(6, "support identities (chessboard, H, T)", 0, [](Outcome& o) {
    run_checks(o, {"chessboard-support", "sandwich-support", "k-sandwich-support"}, Tier::Full, {Family::A, Family::D});
  });

  criterion(7, "structural identities at enumeration level", 0, [](Outcome& o) {
    run_checks(o,
               {"zero-one-swap", "even-zero-block", "compression", "odd-block-reduction", "even-block-reduction",
                "multinomial-split", "even-recurrence"},
               Tier::Extended, {Family::D});
  });

  criterion(8, "M_I values and exact divisibility, n<=7", 0, [](Outcome& o) {
    if (M_of(4, IndexSet::of(4, {0, 2})) != pow(one_minus(2), 3)) o.fail("M at n=4, {0,2}");
    if (M_of(4, IndexSet::of(4, {0, 3})) != one_minus(2) * one_minus(4)) o.fail("M at n=4, {0,3}");
    if (M_of(6, IndexSet::of(6, {0, 2, 3, 5})) != one_minus(3) * one_minus(4) * one_minus(6)) o.fail("M at n=6, {0,2,3,5}");
    if (M_of(6, IndexSet::of(6, {0, 2, 4, 5})) != pow(one_minus(3), 2) * pow(one_minus(4), 2))
      o.fail("M at n=6, {0,2,4,5}");
    for (int n = 3; n <= 7; ++n)
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        const IndexSet I(n, m);
        if (M_of(n, I) * alt_product(2 * m_of(I) + 2, n, true) != closed_D(n, I)) o.fail(to_string(I));
      }
  });

  criterion(9, "conjectured products for {0,i} and {0,1,i}, n in [5,8]", 0, [](Outcome& o) {
    for (int n = 5; n <= 8; ++n)
      for (int i = 3; i < n; ++i) {
        if (closed_D(n, IndexSet::of(n, {0, i})) != conjecture_formulas(n, i, ConjectureVariant::ZeroI))
          o.fail("{0," + std::to_string(i) + "} at n=" + std::to_string(n));
        if (closed_D(n, IndexSet::of(n, {0, 1, i})) != conjecture_formulas(n, i, ConjectureVariant::ZeroOneI))
          o.fail("{0,1," + std::to_string(i) + "} at n=" + std::to_string(n));
      }
  });

  criterion(10, "cyclotomic classification n<=8, trinomials n<=24", 0, [](Outcome& o) {
    for (int n = 2; n <= 8; ++n)
      for (std::uint32_t m = 0; m + 1 < (1u << n); ++m) {
        const IndexSet I(n, m);
        const bool expected_non = n % 2 == 0 && (m & 1u) && [&] {
          for (int k = 1; k < n; k += 2)
            if (!I.contains(k)) return false;
          return true;
        }();
        const IntPoly p = closed_D(n, I);
        if (is_cyclotomic_product(p) == expected_non) o.fail("classification of " + to_string(I));
        if (expected_non && noncyclotomic_form(n, I) != p) o.fail("displayed form at " + to_string(I));
      }
    for (int n = 2; n <= 24; ++n)
      for (int m = 1; m < n; ++m)
        if (is_cyclotomic_product(trinomial(n, m)) != (n == 2 * m)) o.fail("trinomial " + std::to_string(n) + "," + std::to_string(m));
  });

  criterion(11, "D_4^{0,1,3} = 1 + 2x^2 - 3x^4, not cyclotomic", 0, [](Outcome& o) {
    const auto I = IndexSet::of(4, {0, 1, 3});
    const IntPoly expected = P({1, 0, 2, 0, -3});
    if (brute_quotient(Family::D, 4, I) != expected) o.fail("enumeration");
    if (closed_D(4, I) != expected) o.fail("closed form");
    if (is_cyclotomic_product(expected)) o.fail("classified as cyclotomic");
  });

  return failures == 0 ? 0 : 1;
}

#include "oddlen/enumerate.hpp"

#include "kernel.hpp"
#include "oddlen/errors.hpp"

#include <stdexcept>

namespace oddlen {

namespace detail {

std::vector<DescentTable> to_tables(Family f, int n, const CountGrid& grid) {
  std::vector<DescentTable> out(static_cast<std::size_t>(grid.tables));
  for (int t = 0; t < grid.tables; ++t) {
    auto& tab = out[static_cast<std::size_t>(t)];
    tab.family = f;
    tab.n = n;
    tab.buckets.resize(static_cast<std::size_t>(grid.masks));
    for (int m = 0; m < grid.masks; ++m) {
      auto first = grid.cells.begin() + static_cast<std::ptrdiff_t>((static_cast<std::size_t>(t) * grid.masks + m) * grid.width);
      tab.buckets[static_cast<std::size_t>(m)] = IntPoly(std::vector<std::int64_t>(first, first + grid.width));
    }
  }
  return out;
}

} // namespace detail

IntPoly DescentTable::total() const {
  IntPoly sum;
  for (const auto& b : buckets) sum += b;
  return sum;
}

int enumeration_budget(Family f) { return f == Family::A ? 10 : 8; }

void check_budget(Family f, int n) {
  if (n < 1) throw std::invalid_argument("rank n must be at least 1");
  if (n > enumeration_budget(f))
    throw BudgetExceeded("enumeration of type " + to_string(f) + " is limited to n <= " +
                         std::to_string(enumeration_budget(f)) + ", got n = " + std::to_string(n));
}

std::int64_t group_order(Family f, int n) {
  std::int64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  switch (f) {
  case Family::A: return fact;
  case Family::B: return fact << n;
  case Family::D: return fact << (n - 1);
  }
  return 0;
}

namespace {

Classifier from_filter(const ElementFilter& keep) {
  if (!keep) return {};
  return [keep](const SignedPerm& s) { return keep(s) ? 0 : -1; };
}

} // namespace

DescentTable brute_table_serial(Family f, int n, const ElementFilter& keep) {
  return brute_tables_serial(f, n, 1, from_filter(keep)).front();
}

DescentTable brute_table_parallel(Family f, int n, const ElementFilter& keep, int workers) {
  return brute_tables_parallel(f, n, 1, from_filter(keep), workers).front();
}

DescentTable brute_table(Family f, int n, const ElementFilter& keep) { return brute_table_parallel(f, n, keep); }

IntPoly quotient_poly(const DescentTable& t, const IndexSet& I) {
  if (I.n() != t.n) throw std::invalid_argument("quotient_poly: rank mismatch");
  if (t.family == Family::A && I.contains(0)) throw std::invalid_argument("label 0 is not a type A generator");
  IntPoly sum;
  for (std::uint32_t m = 0; m < t.buckets.size(); ++m)
    if ((m & I.mask()) == 0) sum += t.buckets[m];
  return sum;
}

std::vector<IntPoly> all_quotient_polys(const DescentTable& t) {
  const std::uint32_t full = (1u << t.n) - 1u;
  // g[S] = sum of buckets over descent sets contained in S
  std::vector<IntPoly> g = t.buckets;
  for (int b = 0; b < t.n; ++b)
    for (std::uint32_t m = 0; m <= full; ++m)
      if (m & (1u << b)) g[m] += g[m ^ (1u << b)];
  std::vector<IntPoly> out(g.size());
  for (std::uint32_t I = 0; I <= full; ++I) out[I] = g[full & ~I];
  return out;
}

IntPoly brute_quotient(Family f, int n, const IndexSet& I) { return quotient_poly(brute_table(f, n), I); }

IntPoly brute_filtered(Family f, int n, const IndexSet& I, int b, int v) {
  if (b < 1 || b > n) throw std::invalid_argument("brute_filtered: position out of range");
  if (v != n && v != -n) throw std::invalid_argument("brute_filtered: value must be n or -n");
  return brute_sum(f, n, I, [b, v](const SignedPerm& s) { return s(b) == v; });
}

IntPoly brute_sum(Family f, int n, const IndexSet& I, const ElementFilter& keep) {
  return quotient_poly(brute_table(f, n, keep), I);
}

std::vector<DescentTable> position_tables(Family f, int n) {
  return brute_tables_parallel(f, n, 2 * n, [n](const SignedPerm& s) {
    int p = s.position_of(n);
    return p > 0 ? position_slot(p, n) : position_slot(-p, -n);
  });
}

} // namespace oddlen

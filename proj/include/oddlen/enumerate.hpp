#ifndef ODDLEN_ENUMERATE_HPP
#define ODDLEN_ENUMERATE_HPP

#include "oddlen/family.hpp"
#include "oddlen/indexset.hpp"
#include "oddlen/sperm.hpp"
#include "oddlen/zpoly.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace oddlen {

/// Sum of (-1)^length x^oddlength over group elements, split by exact
/// descent set: buckets[mask] collects the elements whose descent set is
/// `mask`.
struct DescentTable {
  Family family = Family::D;
  int n = 0;
  std::vector<IntPoly> buckets;

  IntPoly total() const;
  friend bool operator==(const DescentTable&, const DescentTable&) = default;
};

/// Largest n each family may enumerate (D/B: 8, A: 10).
int enumeration_budget(Family f);
/// Throws BudgetExceeded when n is past the budget, invalid_argument when
/// n < 1.
void check_budget(Family f, int n);
std::int64_t group_order(Family f, int n);

/// Routes each element to one of `count` tables, or drops it with -1.
using Classifier = std::function<int(const SignedPerm&)>;
using ElementFilter = std::function<bool(const SignedPerm&)>;

/// Reference kernel: one thread, lexicographic permutations times sign
/// masks, statistics taken from the sperm module.
std::vector<DescentTable> brute_tables_serial(Family f, int n, int count, const Classifier& classify);
/// OpenMP kernel: permutation ranks are unranked independently and handed
/// out dynamically; each worker keeps private signed counts merged at the
/// end. workers <= 0 uses the runtime default.
std::vector<DescentTable> brute_tables_parallel(Family f, int n, int count, const Classifier& classify,
                                                int workers = 0);

DescentTable brute_table_serial(Family f, int n, const ElementFilter& keep = {});
DescentTable brute_table_parallel(Family f, int n, const ElementFilter& keep = {}, int workers = 0);
// The production path is the parallel kernel.
DescentTable brute_table(Family f, int n, const ElementFilter& keep = {});

/// Sum of the buckets whose descent set misses I.
IntPoly quotient_poly(const DescentTable& t, const IndexSet& I);
/// quotient_poly for every I at once, indexed by I's mask, via a subset-sum
/// transform over the complement.
std::vector<IntPoly> all_quotient_polys(const DescentTable& t);

IntPoly brute_quotient(Family f, int n, const IndexSet& I);
/// Quotient sum over elements with sigma(b) == v, v in {n, -n}.
IntPoly brute_filtered(Family f, int n, const IndexSet& I, int b, int v);
IntPoly brute_sum(Family f, int n, const IndexSet& I, const ElementFilter& keep);

/// Visits every element of the group once, in lexicographic order of the
/// absolute values and then sign masks.
void for_each_element(Family f, int n, const std::function<void(const SignedPerm&)>& visit);

/// Tables split by where +-n sits: index 2(b-1) for sigma(b) = n and
/// 2(b-1)+1 for sigma(b) = -n.
std::vector<DescentTable> position_tables(Family f, int n);
inline int position_slot(int b, int v) { return 2 * (b - 1) + (v < 0 ? 1 : 0); }

} // namespace oddlen

#endif // ODDLEN_ENUMERATE_HPP

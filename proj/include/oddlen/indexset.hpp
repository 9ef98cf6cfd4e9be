#ifndef ODDLEN_INDEXSET_HPP
#define ODDLEN_INDEXSET_HPP

#include "oddlen/zpoly.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace oddlen {

inline constexpr int kMaxRank = 16;

/// Subset of the generator labels [0, n-1], stored as a bitmask.
class IndexSet {
public:
  IndexSet() = default;
  IndexSet(int n, std::uint32_t mask);

  static IndexSet empty(int n) { return {n, 0}; }
  static IndexSet full(int n);
  // [lo, hi]; empty when hi < lo
  static IndexSet interval(int n, int lo, int hi);
  static IndexSet of(int n, std::initializer_list<int> members);
  static IndexSet of(int n, const std::vector<int>& members);

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return i >= 0 && i < n_ && ((mask_ >> i) & 1u); }
  int size() const { return __builtin_popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == full(n_).mask_; }
  bool subset_of(const IndexSet& other) const { return (mask_ & ~other.mask_) == 0; }
  bool disjoint_from(std::uint32_t m) const { return (mask_ & m) == 0; }
  std::vector<int> members() const;

  IndexSet with(int i) const;
  IndexSet without(int i) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend IndexSet operator|(const IndexSet& a, const IndexSet& b);

private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

struct Interval {
  int lo = 0;
  int hi = -1;
  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ComponentDecomp {
  // Run containing 0; size() == 0 when 0 is not a member.
  Interval zero;
  // Remaining maximal runs in increasing order.
  std::vector<Interval> others;
};

ComponentDecomp components(const IndexSet& I);

/// Sum over all components (including I_0) of floor((|I_k| + 1) / 2).
int m_of(const IndexSet& I);
/// x^2-multinomial [m_I; floor((|I_0|+1)/2), floor((|I_1|+1)/2), ...].
IntPoly c_poly(const IndexSet& I);

IndexSet compress(const IndexSet& I);
bool is_compressed(const IndexSet& I);
/// I with 0 replaced by 1 when 0 is a member.
IndexSet tilde(const IndexSet& I);
/// n even and {0} together with every odd label lies in I. Throws for the
/// full set or n < 2.
bool noncyclotomic_condition(const IndexSet& I);

/// "0,1,3", interval sugar "0-3,6-9", or the empty string for the empty set.
IndexSet parse_index_set(std::string_view text, int n);
std::string to_string(const IndexSet& I);

} // namespace oddlen

#endif // ODDLEN_INDEXSET_HPP

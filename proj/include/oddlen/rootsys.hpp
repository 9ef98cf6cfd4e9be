#ifndef ODDLEN_ROOTSYS_HPP
#define ODDLEN_ROOTSYS_HPP

#include "oddlen/family.hpp"
#include "oddlen/sperm.hpp"

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace oddlen {

// Coordinates in the e_1..e_n basis.
using RootVec = std::vector<int>;

struct SimpleRoot {
  int label;
  RootVec vec;
};

/// Positive roots of A_{n-1}, B_n or D_n with their heights over the simple
/// system. A: e_{i+1} - e_i; B: e_1 and e_{i+1} - e_i; D: e_1 + e_2 and
/// e_{i+1} - e_i. Immutable once built.
struct RootSystem {
  Family family = Family::A;
  int n = 0;
  std::vector<RootVec> positive_roots;
  std::vector<int> heights;
  std::vector<SimpleRoot> simple_roots;

  bool is_positive(const RootVec& v) const { return positive_keys.count(key(v)) != 0; }

  // Roots here have coefficients in {-1, 0, 1}: pack the support of the
  // +1 and -1 coordinates into one word.
  static std::uint32_t key(const RootVec& v);
  std::unordered_set<std::uint32_t> positive_keys;
};

RootSystem build_root_system(Family f, int n);

/// Coefficients of v over the simple roots, by exact rational elimination.
/// Throws if v is not an integral combination.
std::vector<long long> simple_coordinates(const RootSystem& rs, const RootVec& v);

/// Image of a root under w(e_i) = sgn(sigma(i)) e_{|sigma(i)|}.
RootVec act(const SignedPerm& sigma, const RootVec& v);

int length_via_roots(const RootSystem& rs, const SignedPerm& sigma);
int odd_length_via_roots(const RootSystem& rs, const SignedPerm& sigma);

} // namespace oddlen

#endif // ODDLEN_ROOTSYS_HPP

#ifndef ODDLEN_CHESS_HPP
#define ODDLEN_CHESS_HPP

#include "oddlen/family.hpp"
#include "oddlen/indexset.hpp"
#include "oddlen/sperm.hpp"
#include "oddlen/zpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oddlen {

/// i + sigma(i) has the same parity for every position i.
bool is_chessboard(const SignedPerm& sigma);
/// That common parity, or nullopt for non-chessboard elements.
std::optional<int> chess_class(const SignedPerm& sigma);

struct Sandwich {
  int r;
  int h;
  friend bool operator==(const Sandwich&, const Sandwich&) = default;
  friend auto operator<=>(const Sandwich&, const Sandwich&) = default;
};

/// Odd sandwiches in the suffix sigma(c)..sigma(n), sorted. With W the set
/// of absolute values in the suffix and sg(v) the sign of the entry of
/// absolute value v, (r, h) qualifies when h is odd, r and r+h+1 lie in W,
/// and either
///   sg(r) == sg(r+h+1) and every s in [r+1, r+h] within W has the other
///   sign, or
///   r = min W, sg(r) != sg(r+h+1) and every such s has sg(r).
std::vector<Sandwich> odd_sandwiches(const SignedPerm& sigma, int c);

/// (r, h) with h odd, r and r+h+1 placed in the first k positions and
/// r+1..r+h all placed after position k.
std::vector<Sandwich> k_odd_sandwiches(const SignedPerm& sigma, int k);

bool in_H(const SignedPerm& sigma, int c);
bool in_T(const SignedPerm& sigma, int a0);

struct Support {
  enum class Kind { All, Chessboard, H, T };
  Kind kind = Kind::All;
  int param = 0;  // c for H, a0 for T

  static Support all() { return {}; }
  static Support chessboard() { return {Kind::Chessboard, 0}; }
  static Support H(int c) { return {Kind::H, c}; }
  static Support T(int a0) { return {Kind::T, a0}; }
  bool admits(const SignedPerm& sigma) const;
};

/// Quotient sum restricted to the elements the support admits.
IntPoly support_sum(Family f, int n, const IndexSet& I, const Support& support);

/// L(sigma) == L(sigma^J) + L(sigma_J) for J = {1, ..., n-1} in type D.
bool check_L_additivity(const SignedPerm& sigma);

enum class FactorizationKind {
  // I = [0,a0-1] u [a0+1,a1-1] u ... u [a_{s-1}+1, n-1] compressed,
  // a0 in [2, n-2]; the H_{n,a0+1} product decomposition.
  H,
  // I = [0,a0-1] u [a0+1, n-1] with a0 and n odd, a0 in [2, n-2]; the
  // T_n decomposition of I \ {0} over the block [0, a0-1].
  T,
};

struct FactorizationCheck {
  bool ok = false;
  std::string detail;
};

/// Materializes both sides of the set factorization as sorted element lists
/// and compares them, together with the two projection identities. Throws
/// invalid_argument when I does not have the required shape.
FactorizationCheck check_set_factorization(int n, const IndexSet& I, FactorizationKind kind);

} // namespace oddlen

#endif // ODDLEN_CHESS_HPP

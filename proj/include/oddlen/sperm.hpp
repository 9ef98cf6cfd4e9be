#ifndef ODDLEN_SPERM_HPP
#define ODDLEN_SPERM_HPP

#include "oddlen/family.hpp"
#include "oddlen/indexset.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddlen {

/// Signed permutation of degree n <= 16 in one-line notation sigma(1..n).
class SignedPerm {
public:
  SignedPerm() = default;
  explicit SignedPerm(const std::vector<int>& images);

  static SignedPerm identity(int n);

  int n() const { return n_; }
  // Signed evaluation, i in {-n..-1, 1..n}.
  int operator()(int i) const { return i > 0 ? img_[static_cast<std::size_t>(i - 1)] : -img_[static_cast<std::size_t>(-i - 1)]; }
  std::vector<int> one_line() const;

  SignedPerm inverse() const;
  // Signed position p with sigma(p) == value.
  int position_of(int value) const;

  int negatives() const;
  bool in_symmetric() const { return negatives() == 0; }
  bool in_even() const { return negatives() % 2 == 0; }
  bool in_group(Family f) const;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.n_ == b.n_ && a.img_ == b.img_; }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.img_ < b.img_;
  }

private:
  int n_ = 0;
  std::array<std::int8_t, kMaxRank> img_{};
};

/// (sigma tau)(i) = sigma(tau(i)).
SignedPerm compose(const SignedPerm& sigma, const SignedPerm& tau);
inline SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) { return compose(a, b); }

struct StatBundle {
  int inv = 0;
  int nsp = 0;
  int oinv = 0;
  int onsp = 0;
  friend bool operator==(const StatBundle&, const StatBundle&) = default;
};

StatBundle stats(const SignedPerm& sigma);

/// Coxeter length in the given family. Type B adds the negative entries to
/// inv + nsp; type A requires sigma in S_n.
int length(const SignedPerm& sigma, Family f);
/// Odd length in the given family. Type B adds the negative entries sitting
/// at odd positions to oinv + onsp.
int odd_length(const SignedPerm& sigma, Family f);

/// Simple generator s_i of the family as a one-line element.
SignedPerm generator(Family f, int n, int i);

/// Right descents: D uses sigma(0) := -sigma(2), B has 0 in Des iff
/// sigma(1) < 0, A only has labels 1..n-1.
IndexSet descent_set(const SignedPerm& sigma, Family f);
bool in_quotient(const SignedPerm& sigma, const IndexSet& I, Family f);

/// (sigma^J, sigma_J) with sigma = sigma^J * sigma_J, sigma^J free of
/// descents in J and sigma_J in the parabolic subgroup generated by J.
std::pair<SignedPerm, SignedPerm> parabolic_factorize(const SignedPerm& sigma, const IndexSet& J, Family f);

/// sigma x tau: tau's entries shifted by deg(sigma), signs kept.
SignedPerm direct_product(const SignedPerm& sigma, const SignedPerm& tau);

/// (1, -1)(sigma(a), -sigma(a)) sigma; requires sigma(a) > 0.
SignedPerm flip_value(const SignedPerm& sigma, int a);

/// One-line text with optional commas: "3 -2 5 1 -4" or "3,-2,5,1,-4".
SignedPerm parse_signed_perm(std::string_view text);
/// Signed cycle notation over degree n, e.g. "(1,-2)(2,-1)"; an empty
/// string is the identity.
SignedPerm parse_cycles(std::string_view text, int n);
std::string to_string(const SignedPerm& sigma);

} // namespace oddlen

#endif // ODDLEN_SPERM_HPP

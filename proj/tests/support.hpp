#ifndef ODDLEN_TEST_SUPPORT_HPP
#define ODDLEN_TEST_SUPPORT_HPP

#include "oddlen/sperm.hpp"
#include "oddlen/zpoly.hpp"

#include <initializer_list>
#include <vector>

// Ascending coefficients.
inline oddlen::IntPoly P(std::initializer_list<oddlen::IntPoly::Coeff> cs) {
  return oddlen::IntPoly(std::vector<oddlen::IntPoly::Coeff>(cs));
}

inline oddlen::SignedPerm S(std::initializer_list<int> images) { return oddlen::SignedPerm(std::vector<int>(images)); }

// 1 - x^k
inline oddlen::IntPoly one_minus(int k) { return oddlen::IntPoly(1) - oddlen::IntPoly::x_pow(k); }

#endif // ODDLEN_TEST_SUPPORT_HPP

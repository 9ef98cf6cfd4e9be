#ifndef ODDLEN_GENFUN_HPP
#define ODDLEN_GENFUN_HPP

#include "oddlen/enumerate.hpp"
#include "oddlen/family.hpp"
#include "oddlen/indexset.hpp"
#include "oddlen/zpoly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace oddlen {

/// Type A quotient polynomial: C_I times alt_product(2 m_I + 2, n).
IntPoly closed_A(int n, const IndexSet& I);
/// Type B quotient polynomial: x^2-multinomial over the components away from
/// 0, times prod_{j=|I_0|+1}^n (1 - x^j) / prod_{i=1}^m (1 - x^{2i}).
IntPoly closed_B(int n, const IndexSet& I);
/// Type D quotient polynomial. The correction factor
/// (1 + x^{|I_0|} + 2x^{m_I}) / (1 + x^{m_I}) is not a polynomial on its own,
/// so the division happens once, after every other factor is multiplied in.
IntPoly closed_D(int n, const IndexSet& I);
IntPoly closed_formula(Family f, int n, const IndexSet& I);

/// closed_D divided by alt_product(2 m_I + 2, n) squared; requires n >= 3.
IntPoly M_of(int n, const IndexSet& I);

enum class ConjectureVariant { ZeroI, ZeroOneI };
/// For I = {0, i}: alt_product(4, n)^2. For I = {0, 1, i}:
/// (1 - x^4) alt_product(5, n)^2. Requires n >= 5 and 3 <= i <= n - 1.
IntPoly conjecture_formulas(int n, int i, ConjectureVariant v);

/// C_I (1 + x^{|I_0|} + 2x^{n/2}) / (1 + x^{n/2}) alt_product(|I_0| + 2, n),
/// the shape taken by the non-cyclotomic quotients.
IntPoly noncyclotomic_form(int n, const IndexSet& I);

enum class Method { Closed, Brute, Both };
Method parse_method(std::string_view text);
std::string to_string(Method m);

struct GenFunReport {
  Family family = Family::D;
  int n = 0;
  IndexSet set;
  Method method = Method::Closed;
  std::optional<IntPoly> closed;
  std::optional<IntPoly> brute;
  // present only when both sides were computed
  std::optional<bool> equal;
  bool cyclotomic_product = false;
  std::optional<CyclotomicFactorization> factorization;
  std::optional<IntPoly> M;
};

/// `table` may supply a precomputed descent table for the brute side.
GenFunReport make_report(Family f, int n, const IndexSet& I, Method m, const DescentTable* table = nullptr);

} // namespace oddlen

#endif // ODDLEN_GENFUN_HPP

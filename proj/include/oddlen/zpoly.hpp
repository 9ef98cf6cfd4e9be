#ifndef ODDLEN_ZPOLY_HPP
#define ODDLEN_ZPOLY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oddlen {

/// Dense univariate polynomial with exact int64 coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so
/// the zero polynomial is the empty sequence and equality is structural.
/// Every arithmetic operation is overflow-checked and throws OverflowError
/// instead of wrapping.
class IntPoly {
public:
  using Coeff = std::int64_t;

  IntPoly() = default;
  explicit IntPoly(Coeff constant);
  explicit IntPoly(std::vector<Coeff> coeffs);

  static IntPoly monomial(Coeff c, int degree);
  static IntPoly x_pow(int degree) { return monomial(1, degree); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const Coeff> coeffs() const { return coeffs_; }
  Coeff coeff(int k) const;
  Coeff leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Coeff eval(Coeff at) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);

  // Adds c * x^degree in place; the hot path of table accumulation.
  void add_term(Coeff c, int degree);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
  void trim();
  std::vector<Coeff> coeffs_;
};

IntPoly pow(const IntPoly& base, int exponent);

/// Quotient r with p == q * r, or nullopt when q does not divide p over Z.
std::optional<IntPoly> try_exact_div(const IntPoly& p, const IntPoly& q);
/// As try_exact_div but throws InexactDivision; division by zero throws
/// std::domain_error.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

/// Gaussian multinomial [total; parts]_q evaluated at q = x^base_exponent.
IntPoly q_multinomial(int total, std::span<const int> parts, int base_exponent);

/// prod_{j=lo}^{hi} (1 + (-1)^{j-1} x^{floor(j/2)}), optionally squared.
/// The empty product (hi < lo) is 1.
IntPoly alt_product(int lo, int hi, bool square = false);

/// k-th cyclotomic polynomial, memoized; safe to call concurrently.
IntPoly cyclotomic(int k);

int euler_phi(int k);

struct CyclotomicFactorization {
  int sign = 1;
  // (k, multiplicity) pairs in increasing k.
  std::vector<std::pair<int, int>> factors;
};

/// Factorization p = sign * prod Phi_k^e when one exists.
///
/// A nonconstant polynomial is accepted up to an overall sign, since the
/// generating functions are naturally written with factors (1 - x^j) =
/// -(x^j - 1). Among constants only 1 (the empty product) is accepted.
std::optional<CyclotomicFactorization> cyclotomic_factorization(const IntPoly& p);
bool is_cyclotomic_product(const IntPoly& p);

/// Closed criterion for x^n + 2x^m + 1 being a cyclotomic product: n == 2m.
bool trinomial_cyclotomic(int n, int m);
IntPoly trinomial(int n, int m);

/// Ascending render with suppressed unit coefficients: "1 - 3x^2 + x^4".
std::string to_string(const IntPoly& p);
std::string to_string(const CyclotomicFactorization& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

} // namespace oddlen

#endif // ODDLEN_ZPOLY_HPP

#include "oddlen/zpoly.hpp"

#include "oddlen/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace oddlen {

namespace {

using Coeff = IntPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow in addition");
  return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow in subtraction");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("polynomial coefficient overflow in multiplication");
  return r;
}

} // namespace

IntPoly::IntPoly(Coeff constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntPoly::IntPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(Coeff c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  IntPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
  p.coeffs_.back() = c;
  return p;
}

Coeff IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Coeff IntPoly::eval(Coeff at) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, at), *it);
  return acc;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

void IntPoly::add_term(Coeff c, int degree) {
  if (c == 0) return;
  if (degree < 0) throw std::invalid_argument("negative term degree");
  auto k = static_cast<std::size_t>(degree);
  if (k >= coeffs_.size()) coeffs_.resize(k + 1, 0);
  coeffs_[k] = checked_add(coeffs_[k], c);
  trim();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Coeff> out(a.coeffs_.begin(), a.coeffs_.end());
  for (auto& c : out) c = checked_sub(0, c);
  return IntPoly(std::move(out));
}

IntPoly pow(const IntPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial exponent");
  IntPoly result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<IntPoly> try_exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.is_zero()) return IntPoly{};
  if (p.degree() < q.degree()) return std::nullopt;

  auto qc = q.coeffs();
  std::vector<Coeff> rem(p.coeffs().begin(), p.coeffs().end());
  const int dq = q.degree();
  const Coeff lead = q.leading();
  std::vector<Coeff> quot(static_cast<std::size_t>(p.degree() - dq) + 1, 0);

  for (int k = p.degree() - dq; k >= 0; --k) {
    Coeff top = rem[static_cast<std::size_t>(k + dq)];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Coeff c = top / lead;
    quot[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= dq; ++j) {
      auto idx = static_cast<std::size_t>(k + j);
      rem[idx] = checked_sub(rem[idx], checked_mul(c, qc[static_cast<std::size_t>(j)]));
    }
  }
  for (int k = 0; k < dq; ++k)
    if (rem[static_cast<std::size_t>(k)] != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  auto r = try_exact_div(p, q);
  if (!r) throw InexactDivision("inexact polynomial division: (" + to_string(p) + ") / (" + to_string(q) + ")");
  return *r;
}

IntPoly q_multinomial(int total, std::span<const int> parts, int base_exponent) {
  if (total < 0 || base_exponent < 1) throw std::invalid_argument("q_multinomial: bad total or base");
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
    sum += p;
  }
  if (sum != total) throw std::invalid_argument("q_multinomial: parts do not sum to total");

  // Build the coefficient one binomial at a time: after i steps of part p on
  // top of `placed`, the running value is [placed+i choose i] times the
  // earlier binomials, which is always a polynomial.
  IntPoly result(1);
  int placed = 0;
  for (int p : parts) {
    for (int i = 1; i <= p; ++i) {
      result *= IntPoly(1) - IntPoly::x_pow(base_exponent * (placed + i));
      result = exact_div(result, IntPoly(1) - IntPoly::x_pow(base_exponent * i));
    }
    placed += p;
  }
  return result;
}

IntPoly alt_product(int lo, int hi, bool square) {
  IntPoly result(1);
  for (int j = lo; j <= hi; ++j) {
    // floor division so the literal formula also holds for j < 0
    int e = j >= 0 ? j / 2 : -((-j + 1) / 2);
    if (e < 0) throw std::invalid_argument("alt_product: factor with negative exponent");
    Coeff sign = ((j - 1) % 2 == 0) ? 1 : -1;
    result *= IntPoly(1) + IntPoly::monomial(sign, e);
  }
  return square ? result * result : result;
}

int euler_phi(int k) {
  if (k < 1) throw std::invalid_argument("euler_phi: k must be positive");
  int result = k, m = k;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly cyclotomic(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic: k must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
  }
  IntPoly p = IntPoly::x_pow(k) - IntPoly(1);
  for (int d = 1; d < k; ++d)
    if (k % d == 0) p = exact_div(p, cyclotomic(d));
  std::lock_guard lock(mu);
  return memo.emplace(k, std::move(p)).first->second;
}

std::optional<CyclotomicFactorization> cyclotomic_factorization(const IntPoly& p) {
  if (p.is_zero()) return std::nullopt;
  if (p.is_constant()) {
    if (p == IntPoly(1)) return CyclotomicFactorization{};
    return std::nullopt;
  }
  const Coeff lead = p.leading();
  if ((lead != 1 && lead != -1) || std::llabs(p.coeff(0)) != 1) return std::nullopt;

  CyclotomicFactorization out;
  out.sign = static_cast<int>(lead);
  IntPoly residue = lead == 1 ? p : -p;
  const int d0 = residue.degree();
  // phi(k) >= sqrt(k/2) for k > 6, so no factor Phi_k with k > 2 d^2 fits.
  const int k_max = std::max(6, 2 * d0 * d0);
  for (int k = 1; k <= k_max && residue.degree() > 0; ++k) {
    if (euler_phi(k) > residue.degree()) continue;
    const IntPoly phi = cyclotomic(k);
    int mult = 0;
    while (auto q = try_exact_div(residue, phi)) {
      residue = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(k, mult);
  }
  if (residue != IntPoly(1)) return std::nullopt;
  return out;
}

bool is_cyclotomic_product(const IntPoly& p) { return cyclotomic_factorization(p).has_value(); }

IntPoly trinomial(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("trinomial: exponents must be positive");
  return IntPoly::x_pow(n) + IntPoly::monomial(2, m) + IntPoly(1);
}

bool trinomial_cyclotomic(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("trinomial_cyclotomic: exponents must be positive");
  return n == 2 * m;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Coeff c = p.coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    // unsigned magnitude so INT64_MIN renders correctly
    unsigned long long mag = c < 0 ? 0ULL - static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::string to_string(const CyclotomicFactorization& f) {
  std::ostringstream os;
  if (f.sign < 0) os << '-';
  if (f.factors.empty()) {
    os << '1';
    return os.str();
  }
  bool first = true;
  for (auto [k, e] : f.factors) {
    if (!first) os << " * ";
    first = false;
    os << "Phi_" << k;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

} // namespace oddlen

#include "oddlen/genfun.hpp"

#include <stdexcept>

namespace oddlen {

namespace {

IntPoly one_minus_x(int e) { return IntPoly(1) - IntPoly::x_pow(e); }
IntPoly one_plus_x(int e) { return IntPoly(1) + IntPoly::x_pow(e); }

void check_set(int n, const IndexSet& I) {
  if (I.n() != n) throw std::invalid_argument("index set rank does not match n");
}

} // namespace

IntPoly closed_A(int n, const IndexSet& I) {
  check_set(n, I);
  if (I.contains(0)) throw std::invalid_argument("type A index sets live in [1, n-1]");
  return c_poly(I) * alt_product(2 * m_of(I) + 2, n);
}

IntPoly closed_B(int n, const IndexSet& I) {
  check_set(n, I);
  auto cd = components(I);
  std::vector<int> parts;
  int m = 0;
  for (const auto& c : cd.others) {
    parts.push_back((c.size() + 1) / 2);
    m += parts.back();
  }
  IntPoly num = q_multinomial(m, parts, 2);
  for (int j = cd.zero.size() + 1; j <= n; ++j) num *= one_minus_x(j);
  IntPoly den(1);
  for (int i = 1; i <= m; ++i) den *= one_minus_x(2 * i);
  return exact_div(num, den);
}

IntPoly closed_D(int n, const IndexSet& I) {
  check_set(n, I);
  if (n == 1 || I.is_full()) return IntPoly(1);
  if (I.is_empty()) return pow(alt_product(2, n), 2);

  const IndexSet It = tilde(I);
  const int a = components(I).zero.size();
  const int m = m_of(I);
  const int mt = m_of(It);
  IntPoly p = c_poly(It) * alt_product(2 * ((a + 2) / 2), n) * alt_product(2 * mt + 2, n);

  if (a >= 2 && a % 2 == 0) {
    if (n == 2 * m) return exact_div(p * (one_plus_x(a) + IntPoly::monomial(2, m)), one_plus_x(m));
    if (n > 2 * m) return one_plus_x(a) * p;
  }
  return p;
}

IntPoly closed_formula(Family f, int n, const IndexSet& I) {
  switch (f) {
  case Family::A: return closed_A(n, I);
  case Family::B: return closed_B(n, I);
  case Family::D: return closed_D(n, I);
  }
  throw std::invalid_argument("unsupported family");
}

IntPoly M_of(int n, const IndexSet& I) {
  if (n < 3) throw std::invalid_argument("M_I is defined for n >= 3");
  return exact_div(closed_D(n, I), alt_product(2 * m_of(I) + 2, n, true));
}

IntPoly conjecture_formulas(int n, int i, ConjectureVariant v) {
  if (n < 5 || i < 3 || i > n - 1) throw std::invalid_argument("conjectured products need n >= 5 and 3 <= i <= n-1");
  if (v == ConjectureVariant::ZeroI) return alt_product(4, n, true);
  return one_minus_x(4) * alt_product(5, n, true);
}

IntPoly noncyclotomic_form(int n, const IndexSet& I) {
  check_set(n, I);
  if (!noncyclotomic_condition(I)) throw std::invalid_argument("index set does not satisfy the non-cyclotomic condition");
  const int a = components(I).zero.size();
  const int h = n / 2;
  IntPoly num = c_poly(I) * (one_plus_x(a) + IntPoly::monomial(2, h)) * alt_product(a + 2, n);
  return exact_div(num, one_plus_x(h));
}

Method parse_method(std::string_view text) {
  if (text == "closed") return Method::Closed;
  if (text == "brute") return Method::Brute;
  if (text == "both") return Method::Both;
  throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected closed, brute or both)");
}

std::string to_string(Method m) {
  switch (m) {
  case Method::Closed: return "closed";
  case Method::Brute: return "brute";
  case Method::Both: return "both";
  }
  return "?";
}

GenFunReport make_report(Family f, int n, const IndexSet& I, Method m, const DescentTable* table) {
  check_set(n, I);
  if (f == Family::A && I.contains(0)) throw std::invalid_argument("type A index sets live in [1, n-1]");
  GenFunReport r;
  r.family = f;
  r.n = n;
  r.set = I;
  r.method = m;
  if (m != Method::Brute) r.closed = closed_formula(f, n, I);
  if (m != Method::Closed) {
    if (table) {
      if (table->family != f || table->n != n) throw std::invalid_argument("descent table does not match the request");
      r.brute = quotient_poly(*table, I);
    } else {
      r.brute = brute_quotient(f, n, I);
    }
  }
  if (m == Method::Both) r.equal = *r.closed == *r.brute;
  const IntPoly& subject = r.closed ? *r.closed : *r.brute;
  r.factorization = cyclotomic_factorization(subject);
  r.cyclotomic_product = r.factorization.has_value();
  if (f == Family::D && n >= 3)
    r.M = r.closed ? std::optional<IntPoly>(M_of(n, I))
                   : try_exact_div(*r.brute, alt_product(2 * m_of(I) + 2, n, true));
  return r;
}

} // namespace oddlen

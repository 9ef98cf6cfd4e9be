#include "oddlen/rootsys.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace oddlen {

namespace {

struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long a, long long b = 1) : num(a), den(b) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool zero() const { return num == 0; }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
};

RootVec unit(int n, int i) {
  RootVec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

RootVec combo(int n, int i, int ci, int j, int cj) {
  RootVec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i - 1)] = ci;
  v[static_cast<std::size_t>(j - 1)] = cj;
  return v;
}

void check_compatible(const RootSystem& rs, const SignedPerm& s) {
  if (s.n() != rs.n) throw std::invalid_argument("root system and element have different rank");
  if (!s.in_group(rs.family))
    throw std::invalid_argument("element " + to_string(s) + " is not in the type " + to_string(rs.family) + " group");
}

} // namespace

std::uint32_t RootSystem::key(const RootVec& v) {
  std::uint32_t plus = 0, minus = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 1) plus |= 1u << i;
    else if (v[i] == -1) minus |= 1u << i;
    else if (v[i] != 0) throw std::invalid_argument("root coordinate outside {-1, 0, 1}");
  }
  return plus | (minus << 16);
}

RootSystem build_root_system(Family f, int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("root system rank must lie in [1, 16]");
  RootSystem rs;
  rs.family = f;
  rs.n = n;

  if (f == Family::B) rs.simple_roots.push_back({0, unit(n, 1)});
  if (f == Family::D && n >= 2) rs.simple_roots.push_back({0, combo(n, 1, 1, 2, 1)});
  for (int i = 1; i < n; ++i) rs.simple_roots.push_back({i, combo(n, i, -1, i + 1, 1)});

  if (f == Family::B)
    for (int i = 1; i <= n; ++i) rs.positive_roots.push_back(unit(n, i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      rs.positive_roots.push_back(combo(n, i, -1, j, 1));
      if (f != Family::A) rs.positive_roots.push_back(combo(n, i, 1, j, 1));
    }

  for (const auto& r : rs.positive_roots) {
    auto c = simple_coordinates(rs, r);
    long long h = 0;
    for (long long x : c) {
      if (x < 0) throw std::logic_error("positive root with a negative simple coordinate");
      h += x;
    }
    rs.heights.push_back(static_cast<int>(h));
    rs.positive_keys.insert(RootSystem::key(r));
  }
  return rs;
}

std::vector<long long> simple_coordinates(const RootSystem& rs, const RootVec& v) {
  const int rows = rs.n;
  const int cols = static_cast<int>(rs.simple_roots.size());
  // Augmented matrix [simple roots as columns | v].
  std::vector<std::vector<Frac>> m(static_cast<std::size_t>(rows), std::vector<Frac>(static_cast<std::size_t>(cols) + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m[r][c] = Frac(rs.simple_roots[static_cast<std::size_t>(c)].vec[static_cast<std::size_t>(r)]);
    m[r][cols] = Frac(v[static_cast<std::size_t>(r)]);
  }
  std::vector<int> pivot_row(static_cast<std::size_t>(cols), -1);
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && m[p][c].zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Frac piv = m[row][c];
    for (int k = c; k <= cols; ++k) m[row][k] = m[row][k] / piv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][c].zero()) continue;
      Frac factor = m[r][c];
      for (int k = c; k <= cols; ++k) m[r][k] = m[r][k] - factor * m[row][k];
    }
    pivot_row[static_cast<std::size_t>(c)] = row++;
  }
  for (int r = row; r < rows; ++r)
    if (!m[r][cols].zero()) throw std::invalid_argument("vector is not in the span of the simple roots");

  std::vector<long long> out(static_cast<std::size_t>(cols), 0);
  for (int c = 0; c < cols; ++c) {
    int r = pivot_row[static_cast<std::size_t>(c)];
    if (r < 0) throw std::logic_error("simple roots are linearly dependent");
    const Frac& x = m[r][cols];
    if (x.den != 1) throw std::invalid_argument("vector is not an integral combination of simple roots");
    out[static_cast<std::size_t>(c)] = x.num;
  }
  return out;
}

RootVec act(const SignedPerm& sigma, const RootVec& v) {
  RootVec out(v.size(), 0);
  for (int i = 1; i <= sigma.n(); ++i) {
    int s = sigma(i);
    out[static_cast<std::size_t>(std::abs(s) - 1)] += (s > 0 ? 1 : -1) * v[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

int length_via_roots(const RootSystem& rs, const SignedPerm& sigma) {
  check_compatible(rs, sigma);
  int c = 0;
  for (const auto& r : rs.positive_roots) c += !rs.is_positive(act(sigma, r));
  return c;
}

int odd_length_via_roots(const RootSystem& rs, const SignedPerm& sigma) {
  check_compatible(rs, sigma);
  int c = 0;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
    if (rs.heights[k] % 2 == 1) c += !rs.is_positive(act(sigma, rs.positive_roots[k]));
  return c;
}

} // namespace oddlen

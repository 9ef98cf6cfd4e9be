#include "oddlen/indexset.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace oddlen {

namespace {

std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

void check_rank(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank n must lie in [1, 16], got " + std::to_string(n));
}

void check_label(int n, int i) {
  if (i < 0 || i >= n)
    throw std::invalid_argument("label " + std::to_string(i) + " outside [0, " + std::to_string(n - 1) + "]");
}

int half_up(int size) { return (size + 1) / 2; }

} // namespace

IndexSet::IndexSet(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  check_rank(n);
  if (mask & ~full_mask(n)) throw std::invalid_argument("index set has members outside [0, n-1]");
}

IndexSet IndexSet::full(int n) {
  check_rank(n);
  return {n, full_mask(n)};
}

IndexSet IndexSet::interval(int n, int lo, int hi) {
  std::uint32_t m = 0;
  for (int i = lo; i <= hi; ++i) {
    check_label(n, i);
    m |= 1u << i;
  }
  return {n, m};
}

IndexSet IndexSet::of(int n, std::initializer_list<int> members) { return of(n, std::vector<int>(members)); }

IndexSet IndexSet::of(int n, const std::vector<int>& members) {
  check_rank(n);
  std::uint32_t m = 0;
  for (int i : members) {
    check_label(n, i);
    m |= 1u << i;
  }
  return {n, m};
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

IndexSet IndexSet::with(int i) const {
  check_label(n_, i);
  return {n_, mask_ | (1u << i)};
}

IndexSet IndexSet::without(int i) const {
  check_label(n_, i);
  return {n_, mask_ & ~(1u << i)};
}

IndexSet operator|(const IndexSet& a, const IndexSet& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("index sets of different rank");
  return {a.n_, a.mask_ | b.mask_};
}

ComponentDecomp components(const IndexSet& I) {
  ComponentDecomp out;
  int i = 0;
  const int n = I.n();
  while (i < n) {
    if (!I.contains(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n && I.contains(j + 1)) ++j;
    if (i == 0)
      out.zero = {0, j};
    else
      out.others.push_back({i, j});
    i = j + 1;
  }
  return out;
}

int m_of(const IndexSet& I) {
  auto cd = components(I);
  int m = half_up(cd.zero.size());
  for (const auto& c : cd.others) m += half_up(c.size());
  return m;
}

IntPoly c_poly(const IndexSet& I) {
  auto cd = components(I);
  std::vector<int> parts{half_up(cd.zero.size())};
  for (const auto& c : cd.others) parts.push_back(half_up(c.size()));
  return q_multinomial(m_of(I), parts, 2);
}

IndexSet compress(const IndexSet& I) {
  auto cd = components(I);
  const int n = I.n();
  std::uint32_t m = 0;
  int b = cd.zero.size();
  for (int i = 0; i < b; ++i) m |= 1u << i;
  for (const auto& c : cd.others) {
    int next = b + 2 * half_up(c.size());
    for (int i = b + 1; i <= next - 1; ++i) m |= 1u << i;
    b = next;
  }
  return {n, m};
}

bool is_compressed(const IndexSet& I) {
  auto cd = components(I);
  bool structural = true;
  int prev_end = cd.zero.size() - 1;  // -1 when I_0 is empty
  for (const auto& c : cd.others) {
    if (c.lo != prev_end + 2 || c.size() % 2 == 0) {
      structural = false;
      break;
    }
    prev_end = c.hi;
  }
  const bool fixed = compress(I) == I;
  if (structural != fixed) throw std::logic_error("compressed-set characterisations disagree for " + to_string(I));
  return structural;
}

IndexSet tilde(const IndexSet& I) {
  if (!I.contains(0)) return I;
  if (I.n() < 2) throw std::invalid_argument("tilde: label 1 does not exist for n = 1");
  return I.without(0).with(1);
}

bool noncyclotomic_condition(const IndexSet& I) {
  const int n = I.n();
  if (n < 2) throw std::invalid_argument("noncyclotomic_condition requires n >= 2");
  if (I.is_full()) throw std::invalid_argument("noncyclotomic_condition requires a proper subset");
  if (n % 2 != 0 || !I.contains(0)) return false;
  for (int i = 1; i < n; i += 2)
    if (!I.contains(i)) return false;
  return true;
}

IndexSet parse_index_set(std::string_view text, int n) {
  check_rank(n);
  auto parse_int = [&](std::string_view tok) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
      throw std::invalid_argument("malformed index '" + std::string(tok) + "'");
    return v;
  };
  auto trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '{')) trimmed.remove_prefix(1);
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '}')) trimmed.remove_suffix(1);

  std::uint32_t m = 0;
  while (!trimmed.empty()) {
    auto comma = trimmed.find(',');
    auto tok = trimmed.substr(0, comma);
    trimmed = comma == std::string_view::npos ? std::string_view{} : trimmed.substr(comma + 1);
    auto dash = tok.find('-', 1);
    int lo, hi;
    if (dash == std::string_view::npos) {
      lo = hi = parse_int(tok);
    } else {
      lo = parse_int(tok.substr(0, dash));
      hi = parse_int(tok.substr(dash + 1));
      if (hi < lo) throw std::invalid_argument("descending interval '" + std::string(tok) + "'");
    }
    for (int i = lo; i <= hi; ++i) {
      check_label(n, i);
      m |= 1u << i;
    }
  }
  return {n, m};
}

std::string to_string(const IndexSet& I) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : I.members()) {
    if (!first) os << ',';
    first = false;
    os << i;
  }
  os << '}';
  return os.str();
}

} // namespace oddlen

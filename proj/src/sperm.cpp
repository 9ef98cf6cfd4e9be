#include "oddlen/sperm.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace oddlen {

SignedPerm::SignedPerm(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("signed permutation degree must lie in [1, 16]");
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    int v = images[static_cast<std::size_t>(i)];
    int a = std::abs(v);
    if (v == 0 || a > n) throw std::invalid_argument("entry " + std::to_string(v) + " outside +-[1, n]");
    if (seen & (1u << a)) throw std::invalid_argument("absolute value " + std::to_string(a) + " repeated");
    seen |= 1u << a;
    img_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
  }
  n_ = n;
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return SignedPerm(v);
}

std::vector<int> SignedPerm::one_line() const {
  return {img_.begin(), img_.begin() + n_};
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> v(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    int s = (*this)(i);
    v[static_cast<std::size_t>(std::abs(s) - 1)] = s > 0 ? i : -i;
  }
  return SignedPerm(v);
}

int SignedPerm::position_of(int value) const {
  for (int i = 1; i <= n_; ++i) {
    int s = (*this)(i);
    if (s == value) return i;
    if (s == -value) return -i;
  }
  throw std::invalid_argument("value " + std::to_string(value) + " not in signed permutation");
}

int SignedPerm::negatives() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += img_[static_cast<std::size_t>(i)] < 0;
  return c;
}

bool SignedPerm::in_group(Family f) const {
  switch (f) {
  case Family::A: return in_symmetric();
  case Family::B: return true;
  case Family::D: return in_even();
  }
  return false;
}

SignedPerm compose(const SignedPerm& sigma, const SignedPerm& tau) {
  if (sigma.n() != tau.n()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> v(static_cast<std::size_t>(sigma.n()));
  for (int i = 1; i <= sigma.n(); ++i) v[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
  return SignedPerm(v);
}

StatBundle stats(const SignedPerm& s) {
  StatBundle b;
  const int n = s.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool odd = (j - i) % 2 == 1;
      if (s(i) > s(j)) {
        ++b.inv;
        b.oinv += odd;
      }
      if (s(i) + s(j) < 0) {
        ++b.nsp;
        b.onsp += odd;
      }
    }
  }
  return b;
}

namespace {

void require_member(const SignedPerm& s, Family f) {
  if (!s.in_group(f))
    throw std::invalid_argument("element " + to_string(s) + " is not in the type " + to_string(f) + " group");
}

} // namespace

int length(const SignedPerm& s, Family f) {
  require_member(s, f);
  auto b = stats(s);
  switch (f) {
  case Family::A: return b.inv;
  case Family::D: return b.inv + b.nsp;
  case Family::B: return b.inv + b.nsp + s.negatives();
  }
  return 0;
}

int odd_length(const SignedPerm& s, Family f) {
  require_member(s, f);
  auto b = stats(s);
  switch (f) {
  case Family::A: return b.oinv;
  case Family::D: return b.oinv + b.onsp;
  case Family::B: {
    int odd_neg = 0;
    for (int i = 1; i <= s.n(); i += 2) odd_neg += s(i) < 0;
    return b.oinv + b.onsp + odd_neg;
  }
  }
  return 0;
}

SignedPerm generator(Family f, int n, int i) {
  if (i < first_generator(f) || i > n - 1 || (i == 0 && f == Family::D && n < 2))
    throw std::invalid_argument("generator label " + std::to_string(i) + " out of range for type " + to_string(f) +
                                " rank " + std::to_string(n));
  auto v = SignedPerm::identity(n).one_line();
  if (i >= 1) {
    std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  } else if (f == Family::B) {
    v[0] = -1;
  } else {
    v[0] = -2;
    v[1] = -1;
  }
  return SignedPerm(v);
}

IndexSet descent_set(const SignedPerm& s, Family f) {
  require_member(s, f);
  const int n = s.n();
  std::uint32_t m = 0;
  for (int i = 1; i < n; ++i)
    if (s(i) > s(i + 1)) m |= 1u << i;
  if (f == Family::B && s(1) < 0) m |= 1u;
  if (f == Family::D && n >= 2 && -s(2) > s(1)) m |= 1u;
  return {n, m};
}

bool in_quotient(const SignedPerm& s, const IndexSet& I, Family f) {
  if (I.n() != s.n()) throw std::invalid_argument("in_quotient: rank mismatch");
  if (f == Family::A && I.contains(0)) throw std::invalid_argument("label 0 is not a type A generator");
  return (descent_set(s, f).mask() & I.mask()) == 0;
}

std::pair<SignedPerm, SignedPerm> parabolic_factorize(const SignedPerm& sigma, const IndexSet& J, Family f) {
  if (J.n() != sigma.n()) throw std::invalid_argument("parabolic_factorize: rank mismatch");
  if (f == Family::A && J.contains(0)) throw std::invalid_argument("label 0 is not a type A generator");
  const int n = sigma.n();
  SignedPerm w = sigma, u = SignedPerm::identity(n);
  for (;;) {
    std::uint32_t hits = descent_set(w, f).mask() & J.mask();
    if (hits == 0) break;
    int i = __builtin_ctz(hits);
    auto s = generator(f, n, i);
    w = w * s;
    u = s * u;
  }
  return {w, u};
}

SignedPerm direct_product(const SignedPerm& sigma, const SignedPerm& tau) {
  auto v = sigma.one_line();
  const int p = sigma.n();
  for (int t : tau.one_line()) v.push_back(t > 0 ? t + p : t - p);
  return SignedPerm(v);
}

SignedPerm flip_value(const SignedPerm& sigma, int a) {
  if (a < 1 || a > sigma.n()) throw std::invalid_argument("flip_value: position out of range");
  const int va = sigma(a);
  if (va <= 0) throw std::invalid_argument("flip_value: sigma(a) must be positive");
  auto v = sigma.one_line();
  for (auto& x : v) {
    // Left multiplication by the two sign changes acts on values.
    if (std::abs(x) == 1) x = -x;
    if (std::abs(x) == va) x = -x;
  }
  return SignedPerm(v);
}

SignedPerm parse_signed_perm(std::string_view text) {
  std::vector<int> v;
  std::string buf(text);
  for (auto& c : buf)
    if (c == ',') c = ' ';
  std::istringstream is(buf);
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument("malformed signed permutation entry '" + tok + "'");
    v.push_back(x);
  }
  return SignedPerm(v);
}

SignedPerm parse_cycles(std::string_view text, int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("cycle notation: degree must lie in [1, 16]");
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  auto assign = [&](int from, int to) {
    if (from == 0 || to == 0 || std::abs(from) > n || std::abs(to) > n)
      throw std::invalid_argument("cycle entry outside +-[1, n]");
    int pos = std::abs(from);
    int val = from > 0 ? to : -to;
    int& slot = img[static_cast<std::size_t>(pos - 1)];
    if (slot != 0 && slot != val) throw std::invalid_argument("cycle notation assigns two images to one point");
    slot = val;
  };
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("cycle notation: missing ')'");
    std::string body(text.substr(i + 1, close - i - 1));
    for (auto& c : body)
      if (c == ',') c = ' ';
    std::istringstream is(body);
    std::vector<int> cyc;
    int x;
    while (is >> x) cyc.push_back(x);
    if (!is.eof()) throw std::invalid_argument("cycle notation: malformed entry");
    for (std::size_t k = 0; k < cyc.size(); ++k) assign(cyc[k], cyc[(k + 1) % cyc.size()]);
    i = close + 1;
  }
  for (int p = 1; p <= n; ++p)
    if (img[static_cast<std::size_t>(p - 1)] == 0) img[static_cast<std::size_t>(p - 1)] = p;
  return SignedPerm(img);
}

std::string to_string(const SignedPerm& s) {
  std::ostringstream os;
  for (int i = 1; i <= s.n(); ++i) {
    if (i > 1) os << ' ';
    os << s(i);
  }
  return os.str();
}

} // namespace oddlen

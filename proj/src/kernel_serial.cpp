#include "kernel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oddlen {

std::vector<DescentTable> brute_tables_serial(Family f, int n, int count, const Classifier& classify) {
  check_budget(f, n);
  if (count < 1) throw std::invalid_argument("table count must be positive");
  detail::CountGrid grid(count, n, detail::odd_length_width(f, n));

  for_each_element(f, n, [&](const SignedPerm& s) {
    int slot = classify ? classify(s) : 0;
    if (slot < 0) return;
    if (slot >= count) throw std::out_of_range("classifier returned an out-of-range table");
    const int ell = length(s, f);
    grid.at(slot, descent_set(s, f).mask(), odd_length(s, f)) += ell % 2 == 0 ? 1 : -1;
  });

  return detail::to_tables(f, n, grid);
}

void for_each_element(Family f, int n, const std::function<void(const SignedPerm&)>& visit) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank n must lie in [1, 16]");
  std::vector<int> abs_perm(static_cast<std::size_t>(n));
  std::iota(abs_perm.begin(), abs_perm.end(), 1);
  const std::uint32_t sign_limit = f == Family::A ? 1u : (1u << n);
  std::vector<int> images(static_cast<std::size_t>(n));
  do {
    for (std::uint32_t signs = 0; signs < sign_limit; ++signs) {
      if (f == Family::D && __builtin_popcount(signs) % 2 != 0) continue;
      for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(i)] = (signs >> i) & 1u ? -abs_perm[static_cast<std::size_t>(i)] : abs_perm[static_cast<std::size_t>(i)];
      visit(SignedPerm(images));
    }
  } while (std::next_permutation(abs_perm.begin(), abs_perm.end()));
}

} // namespace oddlen

#include "kernel.hpp"

#include <array>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oddlen {

namespace {

// Permutation of [1, n] with lexicographic rank `rank`.
void unrank(std::int64_t rank, int n, int* out) {
  std::array<int, kMaxRank> pool{};
  std::array<std::int64_t, kMaxRank + 1> fact{};
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  int left = n;
  for (int i = 0; i < n; ++i) {
    std::int64_t f = fact[static_cast<std::size_t>(n - 1 - i)];
    int k = static_cast<int>(rank / f);
    rank %= f;
    out[i] = pool[static_cast<std::size_t>(k)];
    for (int j = k; j + 1 < left; ++j) pool[static_cast<std::size_t>(j)] = pool[static_cast<std::size_t>(j + 1)];
    --left;
  }
}

struct Summary {
  int ell;
  int odd;
  std::uint32_t des;
};

// Inline statistics; must agree with length/odd_length/descent_set.
Summary summarize(Family f, int n, const int* s) {
  int inv = 0, nsp = 0, oinv = 0, onsp = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int odd = (j - i) & 1;
      if (s[i] > s[j]) {
        ++inv;
        oinv += odd;
      }
      if (s[i] + s[j] < 0) {
        ++nsp;
        onsp += odd;
      }
    }
  std::uint32_t des = 0;
  for (int i = 1; i < n; ++i)
    if (s[i - 1] > s[i]) des |= 1u << i;

  Summary out{};
  switch (f) {
  case Family::A:
    out = {inv, oinv, des};
    break;
  case Family::D:
    if (n >= 2 && -s[1] > s[0]) des |= 1u;
    out = {inv + nsp, oinv + onsp, des};
    break;
  case Family::B: {
    int neg = 0, odd_neg = 0;
    for (int i = 0; i < n; ++i)
      if (s[i] < 0) {
        ++neg;
        odd_neg += (i % 2 == 0);  // 1-based position i+1 is odd
      }
    if (s[0] < 0) des |= 1u;
    out = {inv + nsp + neg, oinv + onsp + odd_neg, des};
    break;
  }
  }
  return out;
}

} // namespace

std::vector<DescentTable> brute_tables_parallel(Family f, int n, int count, const Classifier& classify, int workers) {
  check_budget(f, n);
  if (count < 1) throw std::invalid_argument("table count must be positive");
  const int width = detail::odd_length_width(f, n);
  detail::CountGrid grid(count, n, width);

  std::int64_t perms = 1;
  for (int i = 2; i <= n; ++i) perms *= i;
  const std::uint32_t sign_limit = f == Family::A ? 1u : (1u << n);

#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
#endif

  bool bad_slot = false;

#pragma omp parallel num_threads(threads) if (threads > 1)
  {
    detail::CountGrid local(count, n, width);
    int abs_perm[kMaxRank];
    int s[kMaxRank];
    std::vector<int> images(static_cast<std::size_t>(n));
    bool local_bad = false;

#pragma omp for schedule(dynamic, 16)
    for (std::int64_t rank = 0; rank < perms; ++rank) {
      unrank(rank, n, abs_perm);
      for (std::uint32_t signs = 0; signs < sign_limit; ++signs) {
        if (f == Family::D && __builtin_popcount(signs) % 2 != 0) continue;
        for (int i = 0; i < n; ++i) s[i] = (signs >> i) & 1u ? -abs_perm[i] : abs_perm[i];
        int slot = 0;
        if (classify) {
          images.assign(s, s + n);
          slot = classify(SignedPerm(images));
          if (slot < 0) continue;
          if (slot >= count) {
            local_bad = true;
            continue;
          }
        }
        const Summary sm = summarize(f, n, s);
        local.at(slot, sm.des, sm.odd) += (sm.ell & 1) ? -1 : 1;
      }
    }

#pragma omp critical(oddlen_merge)
    {
      for (std::size_t k = 0; k < grid.cells.size(); ++k) grid.cells[k] += local.cells[k];
      bad_slot = bad_slot || local_bad;
    }
  }

  if (bad_slot) throw std::out_of_range("classifier returned an out-of-range table");
  return detail::to_tables(f, n, grid);
}

} // namespace oddlen

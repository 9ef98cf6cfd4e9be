#ifndef ODDLEN_SRC_KERNEL_HPP
#define ODDLEN_SRC_KERNEL_HPP

// Shared plumbing for the serial and OpenMP enumeration kernels.

#include "oddlen/enumerate.hpp"

#include <cstdint>
#include <vector>

namespace oddlen::detail {

// Odd length never exceeds the number of positive roots.
inline int odd_length_width(Family f, int n) {
  switch (f) {
  case Family::A: return n * (n - 1) / 2 + 1;
  case Family::B: return n * n + 1;
  case Family::D: return n * (n - 1) + 1;
  }
  return 1;
}

// Flat signed counts indexed by [table][descent mask][odd length].
struct CountGrid {
  int tables = 1;
  int masks = 1;
  int width = 1;
  std::vector<std::int64_t> cells;

  CountGrid(int t, int n, int w)
      : tables(t), masks(1 << n), width(w), cells(static_cast<std::size_t>(t) * (1u << n) * static_cast<std::size_t>(w), 0) {}

  std::int64_t& at(int table, std::uint32_t mask, int L) {
    return cells[(static_cast<std::size_t>(table) * masks + mask) * static_cast<std::size_t>(width) + static_cast<std::size_t>(L)];
  }
};

std::vector<DescentTable> to_tables(Family f, int n, const CountGrid& grid);

} // namespace oddlen::detail

#endif // ODDLEN_SRC_KERNEL_HPP

#pragma once

#include <random>

#include "kirby4/matrix.hpp"

namespace testing {

// Product of a few elementary matrices, sign changes and swaps.
inline kirby4::IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = -1) {
  using kirby4::IntMatrix;
  IntMatrix q = IntMatrix::identity(n);
  if (n == 0) return q;
  if (steps < 0) steps = static_cast<int>(2 * n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 5);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    const int c = coin(rng);
    if (c == 0) {
      q.swap_cols(i, j);
    } else if (c == 1) {
      for (std::size_t r = 0; r < n; ++r) q(r, i) = -q(r, i);
    } else if (i != j) {
      q.add_col_multiple(i, j, c % 2 == 0 ? 1 : -1);
    }
  }
  return q;
}

// Direct sum of +-1 entries and hyperbolic planes, of the given size.
inline kirby4::SymIntMatrix random_block_form(std::size_t n, std::mt19937& rng) {
  using kirby4::IntMatrix;
  IntMatrix d(n, n);
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t i = 0; i < n;) {
    const int c = coin(rng);
    if (c == 2 && i + 1 < n) {
      d(i, i + 1) = d(i + 1, i) = 1;
      i += 2;
    } else {
      d(i, i) = c == 0 ? 1 : -1;
      ++i;
    }
  }
  return kirby4::SymIntMatrix(d);
}

}  // namespace testing

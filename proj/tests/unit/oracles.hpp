#pragma once

// Independent brute-force oracles used by the test suite. These deliberately
// avoid the library's own algorithms: invariant factors come from minor gcds,
// determinants from Laplace expansion, splitting types from exhaustive search.

#include <algorithm>
#include <vector>

#include "orbipar/abgroup.hpp"
#include "orbipar/rational.hpp"

namespace oracles {

using orbipar::Int;
using orbipar::IntMat;

inline Int det_laplace(const IntMat& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    IntMat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Int term = m[0][j] * det_laplace(minor);
    if (j % 2) acc -= term; else acc += term;
  }
  return acc;
}

// gcd of all k x k minors (0 when every minor vanishes)
inline Int determinantal_divisor(const IntMat& m, std::size_t k) {
  std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  if (k == 0) return 1;
  if (k > rows || k > cols) return 0;
  Int g = 0;
  // enumerate k-subsets of rows and columns
  std::vector<std::size_t> rsub(k), csub(k);
  for (std::size_t i = 0; i < k; ++i) rsub[i] = i;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) csub[i] = i;
    for (;;) {
      IntMat sub(k, std::vector<Int>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[rsub[a]][csub[b]];
      g = orbipar::gcd_int(g, det_laplace(sub));
      // next column subset
      std::size_t i = k;
      while (i > 0 && csub[i - 1] == cols - k + i - 1) --i;
      if (i == 0) break;
      ++csub[i - 1];
      for (std::size_t j = i; j < k; ++j) csub[j] = csub[j - 1] + 1;
    }
    std::size_t i = k;
    while (i > 0 && rsub[i - 1] == rows - k + i - 1) --i;
    if (i == 0) break;
    ++rsub[i - 1];
    for (std::size_t j = i; j < k; ++j) rsub[j] = rsub[j - 1] + 1;
  }
  return g;
}

// invariant factors via minor gcds: d_k = D_k / D_{k-1}
inline std::vector<Int> invariant_factors_by_minors(const IntMat& m) {
  std::vector<Int> out;
  Int prev = 1;
  std::size_t bound = std::min(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t k = 1; k <= bound; ++k) {
    Int dk = determinantal_divisor(m, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

}  // namespace oracles

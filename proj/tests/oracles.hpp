#pragma once

// Small, slow, obviously-correct reference computations used to cross-check
// the library. Nothing here calls into cyclicpic beyond its number types.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Q = mpq_class;
using IntRows = std::vector<std::vector<Int>>;
using QRows = std::vector<std::vector<Q>>;

// Gauss-Jordan over Q. Returns the unique solution of a x = b, or nothing when
// the system is singular.
inline std::optional<std::vector<Q>> solve(QRows a, std::vector<Q> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Q inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Q f = a[row][col];
      for (std::size_t k = 0; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  return b;
}

// Laplace expansion along the first row.
inline Int laplace_det(const IntRows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    IntRows minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const Int term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Z^k / L for a full-rank L given by generators, with N Z^k inside L. The
// group is enumerated as (Z/N)^k modulo the image of L. Returns, for each m in
// `probes`, the number of cosets x + L with m x in L. For a finite abelian
// group with invariant factors d_i this count is prod gcd(m, d_i), which pins
// the isomorphism type.
struct CosetCounts {
  std::int64_t order = 0;
  std::vector<std::int64_t> killed_by;
};

inline CosetCounts enumerate_cosets(const std::vector<std::vector<std::int64_t>>& generators, int k,
                                    std::int64_t modulus, const std::vector<std::int64_t>& probes) {
  using Vec = std::vector<std::int64_t>;
  auto reduce = [modulus](Vec v) {
    for (auto& x : v) x = ((x % modulus) + modulus) % modulus;
    return v;
  };
  std::set<Vec> sub{Vec(static_cast<std::size_t>(k), 0)};
  std::vector<Vec> frontier(sub.begin(), sub.end());
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier) {
      for (const auto& g : generators) {
        Vec w = v;
        for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] += g[static_cast<std::size_t>(i)];
        w = reduce(w);
        if (sub.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::int64_t total = 1;
  for (int i = 0; i < k; ++i) total *= modulus;
  CosetCounts out;
  out.order = total / static_cast<std::int64_t>(sub.size());
  for (std::int64_t m : probes) {
    std::int64_t hits = 0;
    Vec x(static_cast<std::size_t>(k), 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::int64_t rest = idx;
      for (int i = 0; i < k; ++i) {
        x[static_cast<std::size_t>(i)] = rest % modulus;
        rest /= modulus;
      }
      Vec mx = x;
      for (auto& c : mx) c *= m;
      if (sub.count(reduce(mx)) != 0) ++hits;
    }
    out.killed_by.push_back(hits / static_cast<std::int64_t>(sub.size()));
  }
  return out;
}

}  // namespace oracle

#pragma once

// Dense exact linear algebra shared by the integer, rational and polynomial
// code paths.

#include <Eigen/Core>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <utility>

#include "cyclicpic/error.hpp"
#include "cyclicpic/numeric.hpp"
#include "cyclicpic/symbolic.hpp"

namespace cyclicpic {

inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
  return std::move(*q);
}

/// Fraction-free Gaussian elimination. Every intermediate entry is a minor of
/// the input, so the scalar ring never needs fractions.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) {
    throw Error(ErrorKind::InvalidParams, "determinant of a non-square matrix");
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar num = m(i, j) * m(k, k);
        num -= m(i, k) * m(k, j);
        m(i, j) = exact_quotient(num, prev);
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  if (negate) det = Scalar(-det);
  return det;
}

/// Row-by-row Laplace expansion, memoized on the set of used columns. No
/// division is needed, which makes it the faster choice for sparse polynomial
/// matrices of size up to about 16.
template <typename Derived>
typename Derived::Scalar expansion_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::InvalidParams, "determinant of a non-square matrix");
  }
  const auto n = static_cast<int>(m.rows());
  if (n > 30) throw Error(ErrorKind::OutOfRange, "matrix too large for expansion");
  std::unordered_map<std::uint32_t, Scalar> minors{{0U, Scalar(1)}};
  for (int r = 0; r < n; ++r) {
    std::unordered_map<std::uint32_t, Scalar> next;
    for (const auto& [used, value] : minors) {
      for (int c = 0; c < n; ++c) {
        if ((used >> c) & 1U || is_zero(m(r, c))) continue;
        Scalar term = value * m(r, c);
        if (std::popcount(used >> c) % 2 == 1) term = Scalar(-term);
        auto [it, inserted] = next.try_emplace(used | (1U << c), term);
        if (!inserted) it->second += term;
      }
    }
    minors.clear();
    for (auto& [used, value] : next) {
      if (!is_zero(value)) minors.emplace(used, std::move(value));
    }
  }
  return minors.empty() ? Scalar(0) : minors.begin()->second;
}

}  // namespace cyclicpic

#pragma once

// Binary forms f(x, y) = sum_i a_i x^(m-i) y^i, their discriminants and the
// GL2 action on them.

#include <span>
#include <vector>

#include "cyclicpic/linalg.hpp"
#include "cyclicpic/numeric.hpp"
#include "cyclicpic/random.hpp"
#include "cyclicpic/report.hpp"
#include "cyclicpic/symbolic.hpp"

namespace cyclicpic {

template <typename Scalar>
class BinaryForm {
 public:
  BinaryForm() = default;
  /// coeffs[i] multiplies x^(m-i) y^i, so the degree is coeffs.size() - 1.
  explicit BinaryForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidParams, "a binary form needs coefficients");
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

using NumericForm = BinaryForm<Rational>;
using SymbolicForm = BinaryForm<MultiPoly>;

/// sum_i a_i x^(m-i) y^i with indeterminate coefficients a_0..a_m.
SymbolicForm generic_form(int m);
MultiPoly to_poly(const SymbolicForm& f);
MultiPoly to_poly(const NumericForm& f);

template <typename Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Sylvester matrix of f (degree m1) and g (degree m2), coefficients listed
/// from the highest power down. Throws Error(DegreeMismatch) when a coefficient
/// list does not have exactly degree + 1 entries.
template <typename Scalar>
SquareMatrix<Scalar> sylvester_matrix(std::span<const Scalar> f, int m1, std::span<const Scalar> g,
                                      int m2) {
  if (m1 < 0 || m2 < 0 || f.size() != static_cast<std::size_t>(m1) + 1 ||
      g.size() != static_cast<std::size_t>(m2) + 1) {
    throw Error(ErrorKind::DegreeMismatch, "coefficient count does not match declared degree");
  }
  const int n = m1 + m2;
  SquareMatrix<Scalar> s = SquareMatrix<Scalar>::Constant(n, n, Scalar(0));
  for (int row = 0; row < m2; ++row) {
    for (int k = 0; k <= m1; ++k) s(row, row + k) = f[static_cast<std::size_t>(k)];
  }
  for (int row = 0; row < m1; ++row) {
    for (int k = 0; k <= m2; ++k) s(m2 + row, row + k) = g[static_cast<std::size_t>(k)];
  }
  return s;
}

template <typename Scalar>
Scalar sylvester_resultant(std::span<const Scalar> f, int m1, std::span<const Scalar> g, int m2) {
  return bareiss_determinant(sylvester_matrix(f, m1, g, m2));
}

/// Res(f_x, f_y), the resultant of the partial derivatives. Throws
/// Error(DegreeTooSmall) below degree 2.
template <typename Scalar>
Scalar discriminant(const BinaryForm<Scalar>& f) {
  const int m = f.degree();
  if (m < 2) throw Error(ErrorKind::DegreeTooSmall, "discriminant needs degree >= 2");
  std::vector<Scalar> fx;
  std::vector<Scalar> fy;
  for (int i = 0; i < m; ++i) fx.push_back(f.coeff(i) * Scalar(m - i));
  for (int i = 1; i <= m; ++i) fy.push_back(f.coeff(i) * Scalar(i));
  return sylvester_resultant<Scalar>(fx, m - 1, fy, m - 1);
}

/// Discriminant of the generic degree-m form as a polynomial in a_0..a_m.
/// Throws Error(OutOfRange) above degree 8.
MultiPoly symbolic_discriminant(int m);

/// (A . f)(x, y) = f(A^-1 (x, y)). Throws Error(SingularMatrix) when det A = 0.
NumericForm gl2_action(const Mat2& a, const NumericForm& f);

/// disc(A . f) == det(A)^(-m(m-1)) disc(f), checked exactly.
bool equivariance_weight_check(const NumericForm& f, const Mat2& a);

/// The form with (x, y) swapped, i.e. coefficients reversed.
template <typename Scalar>
BinaryForm<Scalar> swapped(const BinaryForm<Scalar>& f) {
  std::vector<Scalar> c(f.coeffs().rbegin(), f.coeffs().rend());
  return BinaryForm<Scalar>(std::move(c));
}

NumericForm parse_form(std::string_view comma_separated);

NumericForm random_form(int m, Sampler& sampler);
/// Entries of height at most 10, resampled until invertible.
Mat2 random_invertible(Sampler& sampler);

/// Homogeneity of the symbolic discriminant, agreement of the symbolic and
/// numeric paths, equivariance, the action law and vanishing on forms with a
/// square factor, for forms of degree m.
Report verify_discriminant_properties(int m, int trials, std::uint64_t seed);

}  // namespace cyclicpic

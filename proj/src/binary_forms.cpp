#include "cyclicpic/binary_forms.hpp"

#include <sstream>

namespace cyclicpic {

SymbolicForm generic_form(int m) {
  if (m < 0) throw Error(ErrorKind::InvalidParams, "negative degree");
  std::vector<MultiPoly> coeffs;
  for (int i = 0; i <= m; ++i) coeffs.push_back(MultiPoly::var(VarId::a(static_cast<std::uint32_t>(i))));
  return SymbolicForm(std::move(coeffs));
}

namespace {

template <typename Scalar>
MultiPoly form_poly(const BinaryForm<Scalar>& f) {
  const auto m = static_cast<std::uint32_t>(f.degree());
  MultiPoly out;
  for (std::uint32_t i = 0; i <= m; ++i) {
    MultiPoly mono = MultiPoly::term(
        Monomial::from_factors({{VarId::x(), m - i}, {VarId::y(), i}}), 1);
    out += mono * MultiPoly(f.coeff(static_cast<int>(i)));
  }
  return out;
}

// Coefficients of (u x + v y)^k, indexed by the power of y.
std::vector<Rational> linear_power(const Rational& u, const Rational& v, int k) {
  std::vector<Rational> out{Rational(1)};
  for (int step = 0; step < k; ++step) {
    std::vector<Rational> next(out.size() + 1, Rational(0));
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j] += out[j] * u;
      next[j + 1] += out[j] * v;
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Rational> poly_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

MultiPoly to_poly(const SymbolicForm& f) { return form_poly(f); }
MultiPoly to_poly(const NumericForm& f) { return form_poly(f); }

MultiPoly symbolic_discriminant(int m) {
  if (m > 8) throw Error(ErrorKind::OutOfRange, "symbolic discriminant is limited to degree <= 8");
  if (m < 2) throw Error(ErrorKind::DegreeTooSmall, "discriminant needs degree >= 2");
  auto f = generic_form(m);
  std::vector<MultiPoly> fx;
  std::vector<MultiPoly> fy;
  for (int i = 0; i < m; ++i) fx.push_back(f.coeff(i) * MultiPoly(m - i));
  for (int i = 1; i <= m; ++i) fy.push_back(f.coeff(i) * MultiPoly(i));
  return expansion_determinant(sylvester_matrix<MultiPoly>(fx, m - 1, fy, m - 1));
}

NumericForm gl2_action(const Mat2& a, const NumericForm& f) {
  Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (det == 0) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  // A^-1 = [[d, -b], [-c, a]] / det; x' = alpha x + beta y, y' = gamma x + delta y.
  Rational alpha = a(1, 1) / det;
  Rational beta = -a(0, 1) / det;
  Rational gamma = -a(1, 0) / det;
  Rational delta = a(0, 0) / det;
  const int m = f.degree();
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int i = 0; i <= m; ++i) {
    if (f.coeff(i) == 0) continue;
    auto term = poly_product(linear_power(alpha, beta, m - i), linear_power(gamma, delta, i));
    for (int j = 0; j <= m; ++j) out[static_cast<std::size_t>(j)] += f.coeff(i) * term[static_cast<std::size_t>(j)];
  }
  return NumericForm(std::move(out));
}

bool equivariance_weight_check(const NumericForm& f, const Mat2& a) {
  const int m = f.degree();
  Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return discriminant(gl2_action(a, f)) == pow(det, -static_cast<long>(m) * (m - 1)) * discriminant(f);
}

NumericForm parse_form(std::string_view comma_separated) {
  std::vector<Rational> coeffs;
  std::string item;
  std::istringstream in{std::string(comma_separated)};
  while (std::getline(in, item, ',')) coeffs.push_back(parse_rational(item));
  if (coeffs.empty()) throw Error(ErrorKind::Parse, "no coefficients given");
  return NumericForm(std::move(coeffs));
}

NumericForm random_form(int m, Sampler& sampler) {
  std::vector<Rational> coeffs;
  for (int i = 0; i <= m; ++i) coeffs.push_back(sampler.rational());
  return NumericForm(std::move(coeffs));
}

Mat2 random_invertible(Sampler& sampler) {
  Mat2 a;
  do {
    for (int i = 0; i < 4; ++i) a(i / 2, i % 2) = sampler.rational(10);
  } while (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) == 0);
  return a;
}

Report verify_discriminant_properties(int m, int trials, std::uint64_t seed) {
  if (m < 2) throw Error(ErrorKind::DegreeTooSmall, "discriminant needs degree >= 2");
  if (trials < 1) throw Error(ErrorKind::InvalidParams, "trials must be at least 1");
  Report report;
  report.header = "discriminant m=" + std::to_string(m) + " trials=" + std::to_string(trials) +
                  " seed=" + std::to_string(seed);
  Sampler sampler(seed);
  auto tally = [trials](int failures) {
    return std::to_string(trials - failures) + "/" + std::to_string(trials) + " cases";
  };

  const int top = std::min(m, 8);
  bool homogeneous = true;
  for (int k = 2; k <= top; ++k) {
    homogeneous = homogeneous && weighted_degree_check(symbolic_discriminant(k), {{VarFamily::A, 1}}, 2 * (k - 1));
  }
  report.add("symbolic discriminant is homogeneous of degree 2(k-1)", homogeneous,
             "k = 2.." + std::to_string(top));

  if (m <= 8) {
    const MultiPoly symbolic = symbolic_discriminant(m);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
      NumericForm f = random_form(m, sampler);
      Assignment values;
      for (int i = 0; i <= m; ++i) values[VarId::a(static_cast<std::uint32_t>(i))] = f.coeff(i);
      if (eval(symbolic, values) != discriminant(f)) ++failures;
    }
    report.add("symbolic and numeric discriminants agree", failures == 0, tally(failures));
  }

  int equivariance = 0;
  int action = 0;
  int square = 0;
  for (int t = 0; t < trials; ++t) {
    NumericForm f = random_form(m, sampler);
    Mat2 a = random_invertible(sampler);
    Mat2 b = random_invertible(sampler);
    if (!equivariance_weight_check(f, a)) ++equivariance;
    if (gl2_action(Mat2(a * b), f) != gl2_action(a, gl2_action(b, f))) ++action;
    Rational alpha = sampler.nonzero_rational();
    Rational beta = sampler.rational();
    NumericForm g = random_form(m - 2, sampler);
    std::vector<Rational> sq = poly_product({alpha * alpha, 2 * alpha * beta, beta * beta}, g.coeffs());
    if (discriminant(NumericForm(std::move(sq))) != 0) ++square;
  }
  report.add("disc(A.f) = det(A)^(-m(m-1)) disc(f)", equivariance == 0, tally(equivariance));
  report.add("(AB).f = A.(B.f)", action == 0, tally(action));
  report.add("disc vanishes on (alpha x + beta y)^2 g", square == 0, tally(square));
  return report;
}

}  // namespace cyclicpic

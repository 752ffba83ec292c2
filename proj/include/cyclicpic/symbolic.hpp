#pragma once

// Sparse multivariate polynomials with exact rational coefficients, and
// rational functions whose denominators are kept as products of factors.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclicpic/error.hpp"
#include "cyclicpic/numeric.hpp"

namespace cyclicpic {

// Declaration order is the variable order: A < P < S < T < X < Y.
enum class VarFamily : std::uint8_t { A, P, S, T, X, Y };

inline constexpr VarFamily kAllFamilies[] = {VarFamily::A, VarFamily::P, VarFamily::S,
                                             VarFamily::T, VarFamily::X, VarFamily::Y};

struct VarId {
  VarFamily family = VarFamily::X;
  std::uint32_t index = 0;

  /// Validating constructor; S-variables only exist with index 1, 2 or 3.
  static VarId make(VarFamily family, std::uint32_t index);
  static VarId a(std::uint32_t i) { return make(VarFamily::A, i); }
  static VarId p(std::uint32_t i) { return make(VarFamily::P, i); }
  static VarId s(std::uint32_t i) { return make(VarFamily::S, i); }
  static VarId t(std::uint32_t i) { return make(VarFamily::T, i); }
  static VarId x() { return {VarFamily::X, 0}; }
  static VarId y() { return {VarFamily::Y, 0}; }

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

std::string to_string(VarId v);

/// Power product of variables. Exponents are positive; absent variables have
/// exponent zero.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  static Monomial of(VarId v, std::uint32_t exponent = 1);
  /// Accepts factors in any order; merges repeats and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t degree_in(VarId v) const;
  bool contains_family(VarFamily f) const;
  bool only_family(VarFamily f) const;

  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  /// The monomial with every occurrence of v removed.
  Monomial without(VarId v) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;  // sorted by VarId
};

/// Graded lexicographic comparison: negative, zero or positive.
int grlex_compare(const Monomial& lhs, const Monomial& rhs);

struct GrlexGreater {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const {
    return grlex_compare(lhs, rhs) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

using Assignment = std::map<VarId, Rational>;

class MultiPoly {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}  // NOLINT
  static MultiPoly var(VarId v, std::uint32_t exponent = 1);
  static MultiPoly term(Monomial m, Rational coeff);
  /// Builds the canonical form from arbitrary (possibly repeated, possibly
  /// zero) terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  /// Terms in decreasing graded lexicographic order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(VarId v) const;
  std::vector<VarId> variables() const;
  bool only_family(VarFamily f) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(const Monomial& m) const;
  MultiPoly pow(std::uint32_t exponent) const;

  /// Coefficients c_k (free of v) with *this = sum_k c_k v^k.
  std::vector<MultiPoly> coefficients_in(VarId v) const;
  /// Polynomial substitution v := value.
  MultiPoly substitute(VarId v, const MultiPoly& value) const;
  /// Replaces each assigned variable; unassigned variables stay symbolic.
  MultiPoly partial_eval(const Assignment& assignment) const;

  /// *this / divisor when the division is exact, otherwise nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// (c, q) with *this = c * q, q having coprime integer coefficients and a
  /// positive leading coefficient. The zero polynomial yields (0, 0).
  std::pair<Rational, MultiPoly> content_and_primitive() const;

 private:
  std::vector<Term> terms_;
};

/// Exact value; throws Error(MissingVariable) when a variable is unassigned.
Rational eval(const MultiPoly& p, const Assignment& assignment);

/// Canonical text form, e.g. `3/2*a_1^2*p_3 - s_1^2 + 1`.
std::string to_string(const MultiPoly& p);
MultiPoly parse_poly(std::string_view text);

/// Total order on polynomials, used to keep factor lists deterministic.
bool poly_less(const MultiPoly& lhs, const MultiPoly& rhs);

using FamilyWeights = std::map<VarFamily, long>;

/// True iff every monomial of p has weighted degree `expected`. Throws
/// Error(InvalidParams) when a family occurring in p has no weight.
bool weighted_degree_check(const MultiPoly& p, const FamilyWeights& weights, long expected);

/// numerator / prod factor^multiplicity, with every factor a P-family
/// polynomial. Factors are stored primitive with positive leading coefficient,
/// so two equal factors are always structurally equal.
class FactoredRational {
 public:
  struct Factor {
    MultiPoly poly;
    std::uint32_t multiplicity;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  FactoredRational() = default;
  FactoredRational(MultiPoly numerator);  // NOLINT(google-explicit-constructor)
  FactoredRational(const Rational& c) : FactoredRational(MultiPoly(c)) {}  // NOLINT
  FactoredRational(int c) : FactoredRational(MultiPoly(c)) {}  // NOLINT
  /// Throws Error(InvalidParams) for a zero factor or one that involves a
  /// non-P variable.
  FactoredRational(MultiPoly numerator, std::vector<Factor> denominator);

  const MultiPoly& numerator() const { return numerator_; }
  const std::vector<Factor>& denominator_factors() const { return denominator_; }
  MultiPoly expanded_denominator() const;
  bool is_zero() const { return numerator_.is_zero(); }
  bool is_polynomial() const { return denominator_.empty(); }
  bool only_family(VarFamily f) const;

  /// Cancels denominator factors that divide the numerator exactly.
  FactoredRational normalized() const;

  FactoredRational operator-() const;
  friend FactoredRational operator+(const FactoredRational& lhs, const FactoredRational& rhs);
  friend FactoredRational operator-(const FactoredRational& lhs, const FactoredRational& rhs);
  friend FactoredRational operator*(const FactoredRational& lhs, const FactoredRational& rhs);

  /// 1 / *this. Requires a nonzero P-only numerator, which is split into
  /// linear factors p_i, p_i - 1, p_i - p_j where possible.
  FactoredRational inverse() const;

  /// Rewritten over the given common denominator (a multiple of this one).
  MultiPoly numerator_over(const std::vector<Factor>& common) const;

  /// Throws Error(DenominatorVanished) if a factor evaluates to zero.
  Rational eval(const Assignment& assignment) const;

 private:
  MultiPoly numerator_;
  std::vector<Factor> denominator_;  // sorted by poly_less, distinct
};

/// Least common multiple of two factor lists (maximum multiplicity per factor).
std::vector<FactoredRational::Factor> lcm_factors(const std::vector<FactoredRational::Factor>& lhs,
                                                  const std::vector<FactoredRational::Factor>& rhs);

/// Splits a nonzero P-only polynomial into c * prod factors, pulling out the
/// linear factors p_i, p_i - 1 and p_i - p_j by trial division. Any cofactor
/// that is left is kept as one (primitive) factor.
std::pair<Rational, std::vector<FactoredRational::Factor>> split_p_factors(const MultiPoly& q);

/// p with var replaced by value; the result's denominator factors are those of
/// value raised to deg_var(p), then normalized.
FactoredRational substitute(const MultiPoly& p, VarId var, const FactoredRational& value);
FactoredRational substitute(const FactoredRational& f, VarId var, const FactoredRational& value);

/// `N` for polynomials, otherwise `(N)/((F1)^k1*(F2))`.
std::string to_string(const FactoredRational& f);
FactoredRational parse_factored(std::string_view text);

}  // namespace cyclicpic

namespace Eigen {

template <>
struct NumTraits<cyclicpic::MultiPoly> : GenericNumTraits<cyclicpic::MultiPoly> {
  using Real = cyclicpic::MultiPoly;
  using NonInteger = cyclicpic::MultiPoly;
  using Nested = cyclicpic::MultiPoly;
  using Literal = cyclicpic::MultiPoly;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 1000,
    MulCost = 10000
  };
};

}  // namespace Eigen

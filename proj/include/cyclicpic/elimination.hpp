#pragma once

// Rational parametrization of degree-rd binary forms with prescribed values
// f(0,1) = s_1^r, f(1,0) = s_2^r, f(1,1) = s_3^r and f(1,p_i) = t_i^r.
//
// For 3 <= n <= rd+1 the coefficients a_{rd+2-n}, ..., a_{rd-1} are solved for
// as phi_{n-3}, ..., phi_0, rational functions of the remaining coefficients
// a_1..a_{rd+1-n} and of p, s, t. Each step of the recursion isolates one more
// coefficient from the next condition t_k^r = f(1, p_k).

#include <cstdint>
#include <map>
#include <vector>

#include "cyclicpic/binary_forms.hpp"
#include "cyclicpic/random.hpp"
#include "cyclicpic/report.hpp"
#include "cyclicpic/symbolic.hpp"

namespace cyclicpic {

/// sum_k key_k * coeff_k with keys free of p-variables and coefficients in
/// Q(p_1, p_2, ...). This is how phi and psi are stored: every key is one of
/// a_i, s_i^r, t_i^r, and the coefficients stay small.
using LinearForm = std::map<Monomial, FactoredRational, GrlexGreater>;

/// The same function as a single fraction over a common denominator.
FactoredRational assemble(const LinearForm& form);
Rational eval(const LinearForm& form, const Assignment& assignment);

struct EliminationData {
  int r = 0;
  int d = 0;
  int n = 0;
  /// Indexed by i = 0..n-3; phi[i] is the value of a_{rd-1-i}.
  std::vector<LinearForm> phi;
  std::vector<LinearForm> psi;
  /// lambda[i] = p_i^(rd-1-i) * lambda_tilde[i], with lambda[0] = 1.
  std::vector<FactoredRational> lambda;
  /// Polynomial in p_i over Q(p_1..p_{i-1}) with constant term 1.
  std::vector<FactoredRational> lambda_tilde;

  int rd() const { return r * d; }
  /// Number of coefficients a_1..a_{rd+1-n} left free.
  int free_a_count() const { return rd() + 1 - n; }
  FactoredRational phi_rational(int i) const { return assemble(phi.at(static_cast<std::size_t>(i))); }
  FactoredRational psi_rational(int i) const { return assemble(psi.at(static_cast<std::size_t>(i))); }
};

/// Throws Error(InvalidParams) for r < 2 or d < 1 and Error(OutOfRange) unless
/// 3 <= n <= rd+1. Throws Error(NonLinearOccurrence) if a solved coefficient
/// ever shows up non-linearly.
EliminationData build_elimination(int r, int d, int n);

struct FarPoint {
  std::vector<Rational> a;  // a_1 .. a_{rd+1-n}
  std::vector<Rational> p;  // p_1 .. p_{n-3}
  std::vector<Rational> s;  // s_1, s_2, s_3
  std::vector<Rational> t;  // t_1 .. t_{n-3}
  friend bool operator==(const FarPoint&, const FarPoint&) = default;
};

struct ConstrainedPoint {
  NumericForm form;
  std::vector<Rational> p;
  std::vector<Rational> s;
  std::vector<Rational> t;
  friend bool operator==(const ConstrainedPoint&, const ConstrainedPoint&) = default;
};

/// Throws Error(InvalidParams) unless the sizes match and the p-values are
/// pairwise distinct and different from 0 and 1.
void validate(const EliminationData& data, const FarPoint& pt);
Assignment assignment_of(const FarPoint& pt);

/// The map g_n: the full form (s_2^r, a_1, ..., phi_{n-3}, ..., phi_0, s_1^r).
ConstrainedPoint apply_g(const EliminationData& data, const FarPoint& pt);

/// The projection h_n. Throws Error(ConstraintViolated) if cp does not satisfy
/// its defining equations.
FarPoint apply_h(const EliminationData& data, const ConstrainedPoint& cp);

/// Names of the violated equations; empty when cp is on the constrained locus.
std::vector<std::string> constraint_violations(int r, const ConstrainedPoint& cp);

/// Entries with height at most 100, p-values resampled until admissible.
FarPoint random_far_point(const EliminationData& data, Sampler& sampler);

/// The weighted action a . pt = (a^-rd a_i, p, a^-d s, a^-d t).
FarPoint scale(const EliminationData& data, const FarPoint& pt, const Rational& a);

/// Phi_{r,g,n}: the discriminant of the form g_n(pt).
Rational phi_discriminant(const EliminationData& data, const FarPoint& pt);

/// Phi(a . pt) == a^(-2rd(rd-1)) Phi(pt) at `points` random points with
/// `scalars` random a each.
Report verify_delta_weight(const EliminationData& data, int points, int scalars, std::uint64_t seed);

Report verify_elimination_properties(const EliminationData& data, int trials, std::uint64_t seed);

}  // namespace cyclicpic

#include <algorithm>

#include "cyclicpic/symbolic.hpp"

namespace cyclicpic {

namespace {

using Factor = FactoredRational::Factor;

bool factor_less(const Factor& l, const Factor& r) { return poly_less(l.poly, r.poly); }

// Merges already-canonical factors with equal polynomials.
std::vector<Factor> merge_sorted(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), factor_less);
  std::vector<Factor> out;
  for (auto& f : factors) {
    if (f.multiplicity == 0) continue;
    if (!out.empty() && out.back().poly == f.poly) {
      out.back().multiplicity += f.multiplicity;
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

MultiPoly expand(const std::vector<Factor>& factors) {
  MultiPoly out(1);
  for (const auto& f : factors) out *= f.poly.pow(f.multiplicity);
  return out;
}

}  // namespace

FactoredRational::FactoredRational(MultiPoly numerator) : numerator_(std::move(numerator)) {}

FactoredRational::FactoredRational(MultiPoly numerator, std::vector<Factor> denominator)
    : numerator_(std::move(numerator)) {
  std::vector<Factor> canonical;
  for (auto& f : denominator) {
    if (f.poly.is_zero()) throw Error(ErrorKind::InvalidParams, "zero denominator factor");
    if (!f.poly.only_family(VarFamily::P)) {
      throw Error(ErrorKind::InvalidParams,
                  "denominator factor involves non-p variables: " + to_string(f.poly));
    }
    auto [c, q] = f.poly.content_and_primitive();
    numerator_ = numerator_.scaled(pow(c, -static_cast<long>(f.multiplicity)));
    if (!q.is_constant()) canonical.push_back({std::move(q), f.multiplicity});
  }
  denominator_ = merge_sorted(std::move(canonical));
  if (numerator_.is_zero()) denominator_.clear();
}

MultiPoly FactoredRational::expanded_denominator() const { return expand(denominator_); }

bool FactoredRational::only_family(VarFamily f) const { return numerator_.only_family(f); }

FactoredRational FactoredRational::normalized() const {
  FactoredRational out;
  out.numerator_ = numerator_;
  if (numerator_.is_zero()) return out;
  for (const auto& [poly, k] : denominator_) {
    std::uint32_t left = k;
    while (left > 0) {
      auto q = out.numerator_.divide_exact(poly);
      if (!q) break;
      out.numerator_ = std::move(*q);
      --left;
    }
    if (left > 0) out.denominator_.push_back({poly, left});
  }
  return out;
}

FactoredRational FactoredRational::operator-() const {
  FactoredRational out = *this;
  out.numerator_ = -numerator_;
  return out;
}

std::vector<Factor> lcm_factors(const std::vector<Factor>& lhs, const std::vector<Factor>& rhs) {
  std::vector<Factor> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && factor_less(lhs[i], rhs[j]))) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || factor_less(rhs[j], lhs[i])) {
      out.push_back(rhs[j++]);
    } else {
      out.push_back({lhs[i].poly, std::max(lhs[i].multiplicity, rhs[j].multiplicity)});
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly FactoredRational::numerator_over(const std::vector<Factor>& common) const {
  std::vector<Factor> extra;
  auto it = denominator_.begin();
  for (const auto& f : common) {
    while (it != denominator_.end() && factor_less(*it, f)) ++it;
    std::uint32_t have = (it != denominator_.end() && it->poly == f.poly) ? it->multiplicity : 0;
    if (have > f.multiplicity) {
      throw Error(ErrorKind::InternalInconsistency, "common denominator is not a multiple");
    }
    if (f.multiplicity > have) extra.push_back({f.poly, f.multiplicity - have});
  }
  return extra.empty() ? numerator_ : numerator_ * expand(extra);
}

FactoredRational operator+(const FactoredRational& lhs, const FactoredRational& rhs) {
  if (lhs.is_zero()) return rhs;
  if (rhs.is_zero()) return lhs;
  FactoredRational out;
  out.denominator_ = lcm_factors(lhs.denominator_, rhs.denominator_);
  out.numerator_ = lhs.numerator_over(out.denominator_) + rhs.numerator_over(out.denominator_);
  if (out.numerator_.is_zero()) return {};
  return out.normalized();
}

FactoredRational operator-(const FactoredRational& lhs, const FactoredRational& rhs) {
  return lhs + (-rhs);
}

FactoredRational operator*(const FactoredRational& lhs, const FactoredRational& rhs) {
  FactoredRational out;
  out.numerator_ = lhs.numerator_ * rhs.numerator_;
  if (out.numerator_.is_zero()) return out;
  std::vector<Factor> all = lhs.denominator_;
  all.insert(all.end(), rhs.denominator_.begin(), rhs.denominator_.end());
  out.denominator_ = merge_sorted(std::move(all));
  if (out.denominator_.empty()) return out;
  return out.normalized();
}

std::pair<Rational, std::vector<Factor>> split_p_factors(const MultiPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::DenominatorVanished, "cannot invert zero");
  if (!q.only_family(VarFamily::P)) {
    throw Error(ErrorKind::InvalidParams, "expected a polynomial in p only: " + to_string(q));
  }
  std::vector<VarId> vars = q.variables();
  std::vector<MultiPoly> atoms;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    MultiPoly pi = MultiPoly::var(vars[i]);
    atoms.push_back(pi);
    atoms.push_back(pi - MultiPoly(1));
    for (std::size_t j = i + 1; j < vars.size(); ++j) atoms.push_back(pi - MultiPoly::var(vars[j]));
  }
  MultiPoly rest = q;
  std::vector<Factor> factors;
  for (const auto& atom : atoms) {
    std::uint32_t k = 0;
    while (!rest.is_constant()) {
      auto quotient = rest.divide_exact(atom);
      if (!quotient) break;
      rest = std::move(*quotient);
      ++k;
    }
    if (k > 0) factors.push_back({atom, k});
  }
  auto [c, prim] = rest.content_and_primitive();
  if (!prim.is_constant()) factors.push_back({std::move(prim), 1});
  return {c, merge_sorted(std::move(factors))};
}

FactoredRational FactoredRational::inverse() const {
  auto [c, factors] = split_p_factors(numerator_);
  FactoredRational out;
  out.numerator_ = expanded_denominator().scaled(1 / c);
  out.denominator_ = std::move(factors);
  return out;
}

Rational FactoredRational::eval(const Assignment& assignment) const {
  Rational den = 1;
  for (const auto& [poly, k] : denominator_) {
    Rational v = cyclicpic::eval(poly, assignment);
    if (v == 0) {
      throw Error(ErrorKind::DenominatorVanished,
                  "denominator factor " + to_string(poly) + " vanishes");
    }
    den *= pow(v, static_cast<long>(k));
  }
  return cyclicpic::eval(numerator_, assignment) / den;
}

FactoredRational substitute(const MultiPoly& p, VarId var, const FactoredRational& value) {
  auto coeffs = p.coefficients_in(var);
  auto top = static_cast<std::uint32_t>(coeffs.size() - 1);
  if (top == 0) return FactoredRational(p);
  MultiPoly den = value.expanded_denominator();
  std::vector<MultiPoly> den_powers{MultiPoly(1)};
  for (std::uint32_t k = 1; k <= top; ++k) den_powers.push_back(den_powers.back() * den);
  MultiPoly num = coeffs[top];
  for (std::uint32_t k = top; k-- > 0;) {
    num = num * value.numerator() + coeffs[k] * den_powers[top - k];
  }
  std::vector<Factor> factors;
  for (const auto& f : value.denominator_factors()) factors.push_back({f.poly, f.multiplicity * top});
  return FactoredRational(std::move(num), std::move(factors)).normalized();
}

FactoredRational substitute(const FactoredRational& f, VarId var, const FactoredRational& value) {
  for (const auto& factor : f.denominator_factors()) {
    if (factor.poly.degree_in(var) > 0) {
      throw Error(ErrorKind::InvalidParams,
                  "cannot substitute for " + to_string(var) + ", which occurs in a denominator");
    }
  }
  return substitute(f.numerator(), var, value) *
         FactoredRational(MultiPoly(1), f.denominator_factors());
}

}  // namespace cyclicpic

#include "cyclicpic/elimination.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cyclicpic {

namespace {

void add_term(LinearForm& form, const Monomial& key, const FactoredRational& c) {
  if (c.is_zero()) return;
  auto it = form.find(key);
  if (it == form.end()) {
    form.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) form.erase(it);
}

void add_scaled(LinearForm& dst, const LinearForm& src, const FactoredRational& c) {
  for (const auto& [key, coeff] : src) add_term(dst, key, coeff * c);
}

LinearForm scaled(const LinearForm& src, const FactoredRational& c) {
  LinearForm out;
  add_scaled(out, src, c);
  return out;
}

// Splits form = rest + coeff * a, insisting that a occurs only linearly.
std::pair<LinearForm, FactoredRational> split_linear(const LinearForm& form, VarId a) {
  LinearForm rest;
  FactoredRational coeff;
  const Monomial linear = Monomial::of(a);
  for (const auto& [key, c] : form) {
    if (key == linear) {
      coeff = c;
    } else if (key.degree_in(a) > 0) {
      throw Error(ErrorKind::NonLinearOccurrence,
                  to_string(a) + " occurs non-linearly in the monomial " +
                      to_string(MultiPoly::term(key, 1)));
    } else {
      rest.emplace(key, c);
    }
  }
  return {std::move(rest), std::move(coeff)};
}

Monomial rth_power(VarId v, int r) { return Monomial::of(v, static_cast<std::uint32_t>(r)); }

FactoredRational p_power(int i, int e) {
  return FactoredRational(MultiPoly::var(VarId::p(static_cast<std::uint32_t>(i)),
                                         static_cast<std::uint32_t>(e)));
}

}  // namespace

FactoredRational assemble(const LinearForm& form) {
  std::vector<FactoredRational::Factor> common;
  for (const auto& [key, c] : form) common = lcm_factors(common, c.denominator_factors());
  MultiPoly num;
  for (const auto& [key, c] : form) num += c.numerator_over(common).times_monomial(key);
  return FactoredRational(std::move(num), std::move(common)).normalized();
}

Rational eval(const LinearForm& form, const Assignment& assignment) {
  Rational sum = 0;
  for (const auto& [key, c] : form) sum += eval(MultiPoly::term(key, 1), assignment) * c.eval(assignment);
  return sum;
}

EliminationData build_elimination(int r, int d, int n) {
  if (r < 2) throw Error(ErrorKind::InvalidParams, "r must be at least 2");
  if (d < 1) throw Error(ErrorKind::InvalidParams, "d must be at least 1");
  const int rd = r * d;
  if (n < 3 || n > rd + 1) {
    throw Error(ErrorKind::OutOfRange, "elimination needs 3 <= n <= rd+1 = " + std::to_string(rd + 1));
  }
  EliminationData data;
  data.r = r;
  data.d = d;
  data.n = n;

  // f(1,1) = s_3^r solved for a_{rd-1}.
  LinearForm phi0;
  add_term(phi0, rth_power(VarId::s(3), r), 1);
  add_term(phi0, rth_power(VarId::s(2), r), -1);
  add_term(phi0, rth_power(VarId::s(1), r), -1);
  for (int i = 1; i <= rd - 2; ++i) add_term(phi0, Monomial::of(VarId::a(static_cast<std::uint32_t>(i))), -1);
  data.phi.push_back(phi0);
  data.psi.push_back(phi0);
  data.lambda.emplace_back(1);
  data.lambda_tilde.emplace_back(1);

  for (int m = 4; m <= n; ++m) {
    const int k_new = m - 3;
    const VarId a = VarId::a(static_cast<std::uint32_t>(rd + 2 - m));

    std::vector<LinearForm> phi_rest;
    std::vector<FactoredRational> phi_coeff;
    std::vector<LinearForm> psi_rest;
    std::vector<FactoredRational> psi_coeff;
    for (int k = 0; k < k_new; ++k) {
      auto [rest, coeff] = split_linear(data.phi[static_cast<std::size_t>(k)], a);
      phi_rest.push_back(std::move(rest));
      phi_coeff.push_back(std::move(coeff));
      auto [prest, pcoeff] = split_linear(data.psi[static_cast<std::size_t>(k)], a);
      psi_rest.push_back(std::move(prest));
      psi_coeff.push_back(std::move(pcoeff));
    }

    // t^r = s_2^r + sum_{i<=rd+2-m} a_i p^i + sum_k phi_k p^(rd-1-k) + s_1^r p^rd,
    // with p = p_{m-3}; collect the coefficient of a on the right.
    FactoredRational lambda_tilde(1);
    for (int k = 0; k < k_new; ++k) {
      lambda_tilde = lambda_tilde + phi_coeff[static_cast<std::size_t>(k)] * p_power(k_new, k_new - k);
    }
    FactoredRational lambda = p_power(k_new, rd + 2 - m) * lambda_tilde;

    LinearForm psi;
    add_term(psi, rth_power(VarId::t(static_cast<std::uint32_t>(k_new)), r), 1);
    add_term(psi, rth_power(VarId::s(2), r), -1);
    add_term(psi, rth_power(VarId::s(1), r), -p_power(k_new, rd));
    for (int i = 1; i <= rd + 1 - m; ++i) {
      add_term(psi, Monomial::of(VarId::a(static_cast<std::uint32_t>(i))), -p_power(k_new, i));
    }
    for (int k = 0; k < k_new; ++k) {
      add_scaled(psi, phi_rest[static_cast<std::size_t>(k)], -p_power(k_new, rd - 1 - k));
    }
    LinearForm phi = scaled(psi, lambda.inverse());

    for (int k = 0; k < k_new; ++k) {
      auto idx = static_cast<std::size_t>(k);
      add_scaled(phi_rest[idx], phi, phi_coeff[idx]);
      data.phi[idx] = std::move(phi_rest[idx]);
      add_scaled(psi_rest[idx], phi, psi_coeff[idx]);
      data.psi[idx] = std::move(psi_rest[idx]);
    }
    data.phi.push_back(std::move(phi));
    data.psi.push_back(std::move(psi));
    data.lambda.push_back(std::move(lambda));
    data.lambda_tilde.push_back(std::move(lambda_tilde));
  }
  return data;
}

void validate(const EliminationData& data, const FarPoint& pt) {
  const auto extra = static_cast<std::size_t>(data.n - 3);
  if (pt.a.size() != static_cast<std::size_t>(data.free_a_count()) || pt.p.size() != extra ||
      pt.t.size() != extra || pt.s.size() != 3) {
    throw Error(ErrorKind::InvalidParams, "point has the wrong number of coordinates");
  }
  std::set<Rational> seen{Rational(0), Rational(1)};
  for (const auto& p : pt.p) {
    if (!seen.insert(p).second) {
      throw Error(ErrorKind::InvalidParams, "p-values must be distinct and different from 0 and 1");
    }
  }
}

Assignment assignment_of(const FarPoint& pt) {
  Assignment out;
  for (std::size_t i = 0; i < pt.a.size(); ++i) out[VarId::a(static_cast<std::uint32_t>(i + 1))] = pt.a[i];
  for (std::size_t i = 0; i < pt.p.size(); ++i) out[VarId::p(static_cast<std::uint32_t>(i + 1))] = pt.p[i];
  for (std::size_t i = 0; i < pt.s.size(); ++i) out[VarId::s(static_cast<std::uint32_t>(i + 1))] = pt.s[i];
  for (std::size_t i = 0; i < pt.t.size(); ++i) out[VarId::t(static_cast<std::uint32_t>(i + 1))] = pt.t[i];
  return out;
}

ConstrainedPoint apply_g(const EliminationData& data, const FarPoint& pt) {
  validate(data, pt);
  const Assignment values = assignment_of(pt);
  const int rd = data.rd();
  std::vector<Rational> coeffs(static_cast<std::size_t>(rd) + 1);
  coeffs.front() = pow(pt.s[1], data.r);
  coeffs.back() = pow(pt.s[0], data.r);
  for (int i = 1; i <= data.free_a_count(); ++i) coeffs[static_cast<std::size_t>(i)] = pt.a[static_cast<std::size_t>(i - 1)];
  for (int i = 0; i <= data.n - 3; ++i) {
    coeffs[static_cast<std::size_t>(rd - 1 - i)] = eval(data.phi[static_cast<std::size_t>(i)], values);
  }
  return {NumericForm(std::move(coeffs)), pt.p, pt.s, pt.t};
}

std::vector<std::string> constraint_violations(int r, const ConstrainedPoint& cp) {
  std::vector<std::string> out;
  const auto& c = cp.form.coeffs();
  if (cp.s.size() != 3 || cp.p.size() != cp.t.size()) {
    out.emplace_back("coordinate counts");
    return out;
  }
  auto f1 = [&c](const Rational& y) {
    Rational v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * y + *it;
    return v;
  };
  if (c.back() != pow(cp.s[0], r)) out.emplace_back("f(0,1) = s_1^r");
  if (c.front() != pow(cp.s[1], r)) out.emplace_back("f(1,0) = s_2^r");
  if (f1(1) != pow(cp.s[2], r)) out.emplace_back("f(1,1) = s_3^r");
  for (std::size_t i = 0; i < cp.p.size(); ++i) {
    if (f1(cp.p[i]) != pow(cp.t[i], r)) {
      out.push_back("f(1,p_" + std::to_string(i + 1) + ") = t_" + std::to_string(i + 1) + "^r");
    }
  }
  return out;
}

FarPoint apply_h(const EliminationData& data, const ConstrainedPoint& cp) {
  if (cp.form.degree() != data.rd()) {
    throw Error(ErrorKind::ConstraintViolated, "form has degree " + std::to_string(cp.form.degree()) +
                                                   ", expected " + std::to_string(data.rd()));
  }
  if (cp.p.size() != static_cast<std::size_t>(data.n - 3)) {
    throw Error(ErrorKind::ConstraintViolated, "wrong number of marked points");
  }
  auto bad = constraint_violations(data.r, cp);
  if (!bad.empty()) throw Error(ErrorKind::ConstraintViolated, "violated: " + bad.front());
  FarPoint pt;
  pt.a.assign(cp.form.coeffs().begin() + 1, cp.form.coeffs().begin() + 1 + data.free_a_count());
  pt.p = cp.p;
  pt.s = cp.s;
  pt.t = cp.t;
  return pt;
}

FarPoint random_far_point(const EliminationData& data, Sampler& sampler) {
  FarPoint pt;
  for (int i = 0; i < data.free_a_count(); ++i) pt.a.push_back(sampler.rational());
  std::set<Rational> used{Rational(0), Rational(1)};
  for (int i = 0; i < data.n - 3; ++i) {
    Rational p = sampler.rational();
    while (used.count(p) != 0) p = sampler.rational();
    used.insert(p);
    pt.p.push_back(p);
  }
  for (int i = 0; i < 3; ++i) pt.s.push_back(sampler.rational());
  for (int i = 0; i < data.n - 3; ++i) pt.t.push_back(sampler.rational());
  return pt;
}

FarPoint scale(const EliminationData& data, const FarPoint& pt, const Rational& a) {
  FarPoint out = pt;
  const Rational ad = pow(a, -data.d);
  const Rational ard = pow(a, -data.rd());
  for (auto& x : out.a) x *= ard;
  for (auto& x : out.s) x *= ad;
  for (auto& x : out.t) x *= ad;
  return out;
}

Rational phi_discriminant(const EliminationData& data, const FarPoint& pt) {
  return discriminant(apply_g(data, pt).form);
}

Report verify_delta_weight(const EliminationData& data, int points, int scalars, std::uint64_t seed) {
  if (points < 1 || scalars < 1) throw Error(ErrorKind::InvalidParams, "need at least one point and scalar");
  Report report;
  report.header = "delta weight r=" + std::to_string(data.r) + " d=" + std::to_string(data.d) +
                  " n=" + std::to_string(data.n) + " seed=" + std::to_string(seed);
  Sampler sampler(seed);
  const long weight = -2L * data.rd() * (data.rd() - 1);
  int failures = 0;
  for (int i = 0; i < points; ++i) {
    FarPoint pt = random_far_point(data, sampler);
    const Rational base = phi_discriminant(data, pt);
    for (int j = 0; j < scalars; ++j) {
      Rational a = sampler.nonzero_rational();
      if (phi_discriminant(data, scale(data, pt, a)) != pow(a, weight) * base) ++failures;
    }
  }
  const int total = points * scalars;
  report.add("Phi(a . pt) = a^(-2rd(rd-1)) Phi(pt)", failures == 0,
             std::to_string(total - failures) + "/" + std::to_string(total) + " cases");
  return report;
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

Report verify_elimination_properties(const EliminationData& data, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::InvalidParams, "trials must be at least 1");
  Report report;
  report.header = "elimination r=" + std::to_string(data.r) + " d=" + std::to_string(data.d) +
                  " n=" + std::to_string(data.n) + " trials=" + std::to_string(trials) +
                  " seed=" + std::to_string(seed);
  const int count = data.n - 2;

  report.add("lambda_0 is identically 1",
             data.lambda.front().is_polynomial() && data.lambda.front().numerator() == MultiPoly(1));

  {
    const FamilyWeights weights{{VarFamily::A, data.r}, {VarFamily::P, 0}, {VarFamily::S, 1}, {VarFamily::T, 1}};
    std::vector<std::string> failures;
    for (int i = 0; i < count; ++i) {
      if (!weighted_degree_check(data.phi_rational(i).numerator(), weights, data.r)) {
        failures.push_back("phi_" + std::to_string(i));
      }
      if (!weighted_degree_check(data.psi_rational(i).numerator(), weights, data.r)) {
        failures.push_back("psi_" + std::to_string(i));
      }
    }
    report.add("phi and psi numerators are homogeneous of degree r (a:r, s:1, t:1)", failures.empty(),
               failures.empty() ? std::to_string(2 * count) + " numerators" : join(failures));
  }

  {
    std::vector<std::string> failures;
    for (int i = 0; i < count; ++i) {
      const auto& lam = data.lambda[static_cast<std::size_t>(i)];
      bool ok = lam.only_family(VarFamily::P);
      for (VarId v : lam.numerator().variables()) ok = ok && static_cast<int>(v.index) <= i;
      for (const auto& f : lam.denominator_factors()) {
        for (VarId v : f.poly.variables()) ok = ok && static_cast<int>(v.index) <= i;
      }
      if (!ok) failures.push_back("lambda_" + std::to_string(i));
    }
    report.add("lambda_i lies in Q(p_1..p_i)", failures.empty(), join(failures));
  }

  {
    std::vector<std::string> degree_bad;
    std::vector<std::string> constant_bad;
    std::vector<std::string> roots_bad;
    std::vector<std::string> exact_bad;
    std::vector<std::string> shape_bad;
    for (int k = 1; k < count; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      const VarId v = VarId::p(static_cast<std::uint32_t>(k));
      const FactoredRational& lt = data.lambda_tilde[idx];
      const MultiPoly& num = lt.numerator();
      const MultiPoly den = lt.expanded_denominator();
      const std::string name = "lambda~_" + std::to_string(k);
      if (den.degree_in(v) != 0 || num.degree_in(v) != static_cast<std::uint32_t>(k)) degree_bad.push_back(name);
      if (num.substitute(v, MultiPoly(0)) != den) constant_bad.push_back(name);
      std::vector<MultiPoly> roots{MultiPoly(1)};
      for (int i = 1; i < k; ++i) roots.push_back(MultiPoly::var(VarId::p(static_cast<std::uint32_t>(i))));
      bool vanishes = true;
      MultiPoly linear_product(1);
      for (const auto& root : roots) {
        vanishes = vanishes && num.substitute(v, root).is_zero();
        linear_product *= MultiPoly::var(v) - root;
      }
      if (!vanishes) roots_bad.push_back(name);
      auto quotient = num.divide_exact(linear_product);
      if (!quotient || quotient->is_zero() || quotient->degree_in(v) != 0) exact_bad.push_back(name);
      FactoredRational expected = p_power(k, data.rd() - 1 - k) * lt;
      FactoredRational diff = data.lambda[idx] - expected;
      if (!diff.is_zero()) shape_bad.push_back("lambda_" + std::to_string(k));
    }
    report.add("lambda~_k has degree k in p_k", degree_bad.empty(), join(degree_bad));
    report.add("lambda~_k has constant term 1 in p_k", constant_bad.empty(), join(constant_bad));
    report.add("lambda~_k vanishes at p_k = 1, p_1, ..., p_{k-1}", roots_bad.empty(), join(roots_bad));
    report.add("lambda~_k = c * (p_k - 1) * prod (p_k - p_i) by exact division", exact_bad.empty(), join(exact_bad));
    report.add("lambda_k = p_k^(rd-1-k) * lambda~_k", shape_bad.empty(), join(shape_bad));
  }

  Sampler sampler(seed);
  int round_trip_failures = 0;
  int constraint_failures = 0;
  int psi_failures = 0;
  int equivariance_failures = 0;
  for (int trial = 0; trial < trials; ++trial) {
    FarPoint pt = random_far_point(data, sampler);
    ConstrainedPoint cp = apply_g(data, pt);
    if (!constraint_violations(data.r, cp).empty()) {
      ++constraint_failures;
      continue;
    }
    if (apply_h(data, cp) != pt || apply_g(data, apply_h(data, cp)) != cp) ++round_trip_failures;
    Assignment values = assignment_of(pt);
    for (int i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (eval(data.psi[idx], values) != data.lambda[idx].eval(values) * eval(data.phi[idx], values)) {
        ++psi_failures;
        break;
      }
    }
    Rational a = sampler.nonzero_rational();
    ConstrainedPoint scaled_cp = apply_g(data, scale(data, pt, a));
    const Rational factor = pow(a, -data.rd());
    bool equivariant = scaled_cp.p == cp.p;
    for (int i = 0; i <= data.rd(); ++i) {
      equivariant = equivariant && scaled_cp.form.coeff(i) == factor * cp.form.coeff(i);
    }
    if (!equivariant) ++equivariance_failures;
  }
  auto tally = [trials](int failures) {
    return std::to_string(trials - failures) + "/" + std::to_string(trials) + " points";
  };
  report.add("g_n(pt) satisfies every defining equation", constraint_failures == 0, tally(constraint_failures));
  report.add("h_n(g_n(pt)) = pt and g_n(h_n(cp)) = cp", round_trip_failures == 0, tally(round_trip_failures));
  report.add("psi_i = lambda_i * phi_i", psi_failures == 0, tally(psi_failures));
  report.add("g_n(a . pt) = a^-rd g_n(pt)", equivariance_failures == 0, tally(equivariance_failures));
  return report;
}

}  // namespace cyclicpic

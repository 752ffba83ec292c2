#include <algorithm>
#include <map>
#include <unordered_map>

#include "cyclicpic/symbolic.hpp"

namespace cyclicpic {

VarId VarId::make(VarFamily family, std::uint32_t index) {
  if (family == VarFamily::S && (index < 1 || index > 3)) {
    throw Error(ErrorKind::InvalidParams, "s-variables are s_1, s_2, s_3; got s_" +
                                              std::to_string(index));
  }
  return VarId{family, index};
}

std::string to_string(VarId v) {
  static constexpr char kNames[] = {'a', 'p', 's', 't', 'x', 'y'};
  std::string out(1, kNames[static_cast<int>(v.family)]);
  bool bare = (v.family == VarFamily::X || v.family == VarFamily::Y) && v.index == 0;
  if (!bare) out += "_" + std::to_string(v.index);
  return out;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& l, const Factor& r) { return l.first < r.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  std::erase_if(m.factors_, [](const Factor& f) { return f.second == 0; });
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::degree_in(VarId v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
  }
  return 0;
}

bool Monomial::contains_family(VarFamily f) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [f](const Factor& x) { return x.first.family == f; });
}

bool Monomial::only_family(VarFamily f) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [f](const Factor& x) { return x.first.family == f; });
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  auto it = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    while (it != factors_.end() && it->first < v) ++it;
    std::uint32_t sub = (it != factors_.end() && it->first == v) ? it->second : 0;
    if (sub > e) throw Error(ErrorKind::InternalInconsistency, "monomial quotient is not exact");
    if (e > sub) q.factors_.emplace_back(v, e - sub);
  }
  return q;
}

Monomial Monomial::without(VarId v) const {
  Monomial m = *this;
  std::erase_if(m.factors_, [v](const Factor& f) { return f.first == v; });
  return m;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial m;
  m.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
  auto a = lhs.factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != lhs.factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != lhs.factors_.end() && a->first < b->first)) {
      m.factors_.push_back(*a++);
    } else if (a == lhs.factors_.end() || b->first < a->first) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [v, e] : factors_) {
    std::size_t x = (static_cast<std::size_t>(v.family) << 56) ^
                    (static_cast<std::size_t>(v.index) << 20) ^ e;
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int grlex_compare(const Monomial& lhs, const Monomial& rhs) {
  auto dl = lhs.degree();
  auto dr = rhs.degree();
  if (dl != dr) return dl < dr ? -1 : 1;
  const auto& a = lhs.factors();
  const auto& b = rhs.factors();
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first ? 1 : -1;
    if (a[i].second != b[i].second) return a[i].second > b[i].second ? 1 : -1;
  }
  if (i < a.size()) return 1;
  if (i < b.size()) return -1;
  return 0;
}

// --------------------------------------------------------------- MultiPoly

namespace {

void sort_terms(std::vector<MultiPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const MultiPoly::Term& l, const MultiPoly::Term& r) {
    return grlex_compare(l.monomial, r.monomial) > 0;
  });
}

}  // namespace

MultiPoly::MultiPoly(const Rational& constant) {
  if (constant != 0) terms_.push_back({Monomial(), constant});
}

MultiPoly MultiPoly::var(VarId v, std::uint32_t exponent) {
  return term(Monomial::of(v, exponent), 1);
}

MultiPoly MultiPoly::term(Monomial m, Rational coeff) {
  MultiPoly p;
  if (coeff != 0) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(std::move(t.monomial), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  MultiPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({m, c});
  }
  sort_terms(p.terms_);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint32_t MultiPoly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree_in(v));
  return d;
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<VarId> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) out.push_back(f.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MultiPoly::only_family(VarFamily f) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [f](const Term& t) { return t.monomial.only_family(f); });
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, bool negate_b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size()   ? -1
              : j == b.size() ? 1
                              : grlex_compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.size() == 1) return rhs.times_monomial(lhs.terms_[0].monomial).scaled(lhs.terms_[0].coeff);
  if (rhs.size() == 1) return lhs.times_monomial(rhs.terms_[0].monomial).scaled(rhs.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(lhs.size() * rhs.size());
  Rational prod;
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      prod = a.coeff * b.coeff;
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, prod);
      if (!inserted) it->second += prod;
    }
  }
  MultiPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({m, c});
  }
  sort_terms(p.terms_);
  return p;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
  MultiPoly p = *this;
  if (m.is_one()) return p;
  for (auto& t : p.terms_) t.monomial = t.monomial * m;
  return p;
}

MultiPoly MultiPoly::pow(std::uint32_t exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(VarId v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& t : terms_) {
    buckets[t.monomial.degree_in(v)].push_back({t.monomial.without(v), t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    MultiPoly p;
    p.terms_ = std::move(b);
    sort_terms(p.terms_);
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::substitute(VarId v, const MultiPoly& value) const {
  auto coeffs = coefficients_in(v);
  MultiPoly result = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) result = result * value + coeffs[k];
  return result;
}

namespace {

class PowerCache {
 public:
  explicit PowerCache(const Assignment& assignment) : assignment_(assignment) {}

  // nullptr when v is unassigned.
  const Rational* power(VarId v, std::uint32_t e) {
    auto it = cache_.find(v);
    if (it == cache_.end()) {
      auto a = assignment_.find(v);
      if (a == assignment_.end()) return nullptr;
      it = cache_.emplace(v, std::vector<Rational>{Rational(1), a->second}).first;
    }
    auto& powers = it->second;
    while (powers.size() <= e) powers.push_back(powers.back() * powers[1]);
    return &powers[e];
  }

 private:
  const Assignment& assignment_;
  std::map<VarId, std::vector<Rational>> cache_;
};

}  // namespace

MultiPoly MultiPoly::partial_eval(const Assignment& assignment) const {
  PowerCache cache(assignment);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (const Rational* value = cache.power(v, e)) {
        c *= *value;
      } else {
        rest.emplace_back(v, e);
      }
    }
    out.push_back({Monomial::from_factors(std::move(rest)), c});
  }
  return from_terms(std::move(out));
}

Rational eval(const MultiPoly& p, const Assignment& assignment) {
  PowerCache cache(assignment);
  Rational sum = 0;
  Rational term;
  for (const auto& t : p.terms()) {
    term = t.coeff;
    for (const auto& [v, e] : t.monomial.factors()) {
      const Rational* value = cache.power(v, e);
      if (value == nullptr) {
        throw Error(ErrorKind::MissingVariable, "no value for " + to_string(v));
      }
      term *= *value;
    }
    sum += term;
  }
  return sum;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DenominatorVanished, "division by zero polynomial");
  if (is_zero()) return MultiPoly();
  const Term& lead = divisor.leading_term();
  if (divisor.size() == 1) {
    MultiPoly q;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lead.monomial.divides(t.monomial)) return std::nullopt;
      q.terms_.push_back({lead.monomial.quotient_of(t.monomial), t.coeff / lead.coeff});
    }
    return q;
  }
  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : terms_) rem.emplace(t.monomial, t.coeff);
  MultiPoly q;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.monomial.divides(top->first)) return std::nullopt;
    Monomial qm = lead.monomial.quotient_of(top->first);
    Rational qc = top->second / lead.coeff;
    rem.erase(top);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const Term& d = divisor.terms_[k];
      auto [it, inserted] = rem.try_emplace(qm * d.monomial, -qc * d.coeff);
      if (!inserted) {
        it->second -= qc * d.coeff;
        if (it->second == 0) rem.erase(it);
      }
    }
    q.terms_.push_back({std::move(qm), std::move(qc)});
  }
  return q;
}

std::pair<Rational, MultiPoly> MultiPoly::content_and_primitive() const {
  if (is_zero()) return {Rational(0), MultiPoly()};
  BigInt den_lcm = 1;
  BigInt num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  if (terms_.front().coeff < 0) content = -content;
  return {content, scaled(1 / content)};
}

bool poly_less(const MultiPoly& lhs, const MultiPoly& rhs) {
  const auto& a = lhs.terms();
  const auto& b = rhs.terms();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = grlex_compare(a[i].monomial, b[i].monomial);
    if (c != 0) return c < 0;
    if (a[i].coeff != b[i].coeff) return a[i].coeff < b[i].coeff;
  }
  return a.size() < b.size();
}

bool weighted_degree_check(const MultiPoly& p, const FamilyWeights& weights, long expected) {
  for (const auto& t : p.terms()) {
    long w = 0;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = weights.find(v.family);
      if (it == weights.end()) {
        throw Error(ErrorKind::InvalidParams, "no weight given for " + to_string(v));
      }
      w += it->second * static_cast<long>(e);
    }
    if (w != expected) return false;
  }
  return true;
}

}  // namespace cyclicpic

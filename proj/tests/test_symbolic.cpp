#include <doctest.h>

#include "cyclicpic/error.hpp"
#include "cyclicpic/random.hpp"
#include "cyclicpic/symbolic.hpp"

using namespace cyclicpic;

namespace {

MultiPoly X() { return MultiPoly::var(VarId::x()); }
MultiPoly Y() { return MultiPoly::var(VarId::y()); }
MultiPoly a(int i) { return MultiPoly::var(VarId::a(i)); }
MultiPoly p(int i) { return MultiPoly::var(VarId::p(i)); }
MultiPoly s(int i) { return MultiPoly::var(VarId::s(i)); }
MultiPoly t(int i) { return MultiPoly::var(VarId::t(i)); }

// Random polynomial in x, y, a_1, s_1 with small support.
MultiPoly random_poly(Sampler& rng, int terms) {
  const VarId vars[] = {VarId::x(), VarId::y(), VarId::a(1), VarId::s(1)};
  MultiPoly out;
  for (int k = 0; k < terms; ++k) {
    std::vector<std::pair<VarId, std::uint32_t>> factors;
    for (VarId v : vars) {
      const auto e = static_cast<std::uint32_t>(rng.uniform(0, 2));
      if (e > 0) factors.emplace_back(v, e);
    }
    out += MultiPoly::term(Monomial::from_factors(factors), rng.rational(20));
  }
  return out;
}

Assignment random_point(Sampler& rng) {
  return {{VarId::x(), rng.rational()}, {VarId::y(), rng.rational()}, {VarId::a(1), rng.rational()},
          {VarId::s(1), rng.rational()}};
}

}  // namespace

TEST_SUITE("symbolic") {
  TEST_CASE("basic arithmetic") {
    CHECK((X() + (-X())).is_zero());
    CHECK((X() + Y()) * (X() - Y()) == X() * X() - Y() * Y());
    CHECK(((X() + Y()) * (X() - Y())).size() == 2);
    CHECK(s(1).pow(2) == s(1) * s(1));
    CHECK(MultiPoly(0).is_zero());
    CHECK(MultiPoly(Rational(3, 4)).constant_term() == Rational(3, 4));
  }

  TEST_CASE("evaluation") {
    CHECK(eval(X() * X() - Y() * Y(), {{VarId::x(), 3}, {VarId::y(), 1}}) == 8);
    CHECK(eval(MultiPoly(0), {}) == 0);
    CHECK(eval(s(1).pow(3), {{VarId::s(1), 2}}) == 8);
    CHECK_THROWS_AS(eval(X() + Y(), {{VarId::x(), 1}}), Error);
    try {
      eval(a(1), {});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MissingVariable);
    }
  }

  TEST_CASE("substitution") {
    CHECK((a(1) + s(1)).substitute(VarId::a(1), s(2) * s(2)) == s(2) * s(2) + s(1));
    CHECK(X().substitute(VarId::y(), a(3) + 7) == X());

    const FactoredRational t_over_p(t(1), {{p(1), 1}});
    const FactoredRational r = substitute(a(1) * p(1), VarId::a(1), t_over_p);
    CHECK(r.is_polynomial());
    CHECK(r.numerator() == t(1));
    Sampler rng(5);
    for (int k = 0; k < 5; ++k) {
      Assignment at{{VarId::p(1), rng.nonzero_rational()}, {VarId::t(1), rng.rational()}};
      CHECK(r.eval(at) == at[VarId::t(1)]);
    }
  }

  TEST_CASE("weighted homogeneity") {
    const FamilyWeights w{{VarFamily::A, 2}, {VarFamily::S, 1}};
    CHECK(weighted_degree_check(a(1) + s(1).pow(2), w, 2));
    CHECK_FALSE(weighted_degree_check(a(1) + s(1), w, 2));
    CHECK(weighted_degree_check(MultiPoly(0), w, 17));
    CHECK_THROWS_AS(weighted_degree_check(t(1), w, 1), Error);
  }

  TEST_CASE("printing and parsing round trip") {
    const MultiPoly q = parse_poly("3/2*a_1^2*p_1 - s_3^2 + 7*x*y^4 - 1");
    CHECK(parse_poly(to_string(q)) == q);
    CHECK(to_string(X() * Y()) == "x*y");
    CHECK(to_string(MultiPoly(0)) == "0");
    CHECK_THROWS_AS(parse_poly("a_1 +"), Error);
    CHECK_THROWS_AS(parse_poly("s_4"), Error);

    const FactoredRational f(p(1) - 1, {{p(1), 2}, {p(2) - p(1), 1}});
    CHECK(to_string(parse_factored(to_string(f))) == to_string(f));
  }

  TEST_CASE("ring axioms on random polynomials") {
    Sampler rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const MultiPoly f = random_poly(rng, 4);
      const MultiPoly g = random_poly(rng, 3);
      const MultiPoly h = random_poly(rng, 3);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * g == g * f);
      CHECK(f - f == MultiPoly(0));
      const Assignment at = random_point(rng);
      CHECK(eval(f * g + h, at) == eval(f, at) * eval(g, at) + eval(h, at));
      if (!g.is_zero()) {
        auto q = (f * g).divide_exact(g);
        REQUIRE(q.has_value());
        CHECK(*q == f);
      }
    }
  }

  TEST_CASE("substitution commutes with evaluation") {
    Sampler rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      const MultiPoly f = random_poly(rng, 4);
      const MultiPoly value = random_poly(rng, 2).substitute(VarId::x(), MultiPoly(1));
      Assignment at = random_point(rng);
      Assignment at_x = at;
      at_x[VarId::x()] = eval(value, at);
      CHECK(eval(f.substitute(VarId::x(), value), at) == eval(f, at_x));
    }
  }

  TEST_CASE("factored rationals") {
    const FactoredRational u(p(1) * p(1) - p(1), {{p(1), 1}});
    const FactoredRational n = u.normalized();
    CHECK(n.is_polynomial());
    CHECK(n.numerator() == p(1) - 1);

    const FactoredRational lam(p(1).pow(4) * (1 - p(1)));
    const FactoredRational inv = lam.inverse();
    CHECK((inv * lam).normalized().numerator() == MultiPoly(1));
    CHECK(inv.denominator_factors().size() == 2);

    const FactoredRational bad(MultiPoly(1), {{p(1) - 1, 1}});
    CHECK_THROWS_AS(bad.eval({{VarId::p(1), 1}}), Error);
    CHECK_THROWS_AS(FactoredRational(MultiPoly(1), {{a(1), 1}}), Error);

    Sampler rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const FactoredRational x(a(1) + rng.rational() * p(1), {{p(1) - 1, 1}});
      const FactoredRational y(s(1) * p(2), {{p(2), 2}, {p(2) - p(1), 1}});
      Assignment at{{VarId::a(1), rng.rational()}, {VarId::s(1), rng.rational()}};
      Rational p1 = rng.rational();
      Rational p2 = rng.rational();
      while (p1 == 1 || p2 == 0 || p2 == p1) {
        p1 = rng.rational();
        p2 = rng.rational();
      }
      at[VarId::p(1)] = p1;
      at[VarId::p(2)] = p2;
      CHECK((x + y).eval(at) == x.eval(at) + y.eval(at));
      CHECK((x - y).eval(at) == x.eval(at) - y.eval(at));
      CHECK((x * y).eval(at) == x.eval(at) * y.eval(at));
    }
  }
}

#include <doctest.h>

#include "cyclicpic/error.hpp"
#include "cyclicpic/lattices.hpp"
#include "cyclicpic/random.hpp"
#include "oracles.hpp"

using namespace cyclicpic;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntRowVector vec(std::initializer_list<long> v) { return mat({v}).row(0); }

IntMatrix random_matrix(Sampler& rng, Eigen::Index rows, Eigen::Index cols, long bound) {
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng.uniform(-bound, bound));
  }
  return m;
}

oracle::IntRows rows_of(const IntMatrix& m) {
  oracle::IntRows out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j));
  }
  return out;
}

}  // namespace

TEST_SUITE("lattices") {
  TEST_CASE("smith normal form examples") {
    const IntMatrix id = IntMatrix::Identity(4, 4);
    CHECK(smith_normal_form(id).D == id);

    const IntMatrix m = mat({{2, 4}, {6, 8}});
    const SmithForm s = smith_normal_form(m);
    CHECK(s.D == mat({{2, 0}, {0, 4}}));
    CHECK(smith_form_violation(m, s).empty());

    for (long d : {3, 5, 7, 9}) {
      const IntMatrix k = mat({{2, -d}, {-1, (d + 1) / 2}});
      CHECK(smith_normal_form(k).D == IntMatrix::Identity(2, 2));
    }

    const IntMatrix z = IntMatrix::Zero(2, 3);
    CHECK(smith_normal_form(z).D == z);
    CHECK(rank(z) == 0);
  }

  TEST_CASE("smith normal form on random matrices") {
    Sampler rng(31);
    for (int trial = 0; trial < 60; ++trial) {
      const auto rows = static_cast<Eigen::Index>(rng.uniform(1, 6));
      const auto cols = static_cast<Eigen::Index>(rng.uniform(1, 6));
      IntMatrix m = random_matrix(rng, rows, cols, 30);
      if (trial % 5 == 0 && rows > 1) m.row(rows - 1) = 2 * m.row(0) - m.row(1 % rows);
      const SmithForm s = smith_normal_form(m);
      CHECK(smith_form_violation(m, s).empty());
      CHECK(abs(oracle::laplace_det(rows_of(s.U))) == 1);
      CHECK(abs(oracle::laplace_det(rows_of(s.V))) == 1);
      if (rows == cols) {
        BigInt prod = 1;
        for (Eigen::Index i = 0; i < rows; ++i) prod *= s.D(i, i);
        CHECK(abs(oracle::laplace_det(rows_of(m))) == prod);
      }
    }
  }

  TEST_CASE("violation reporting") {
    const IntMatrix m = mat({{2, 4}, {6, 8}});
    SmithForm s = smith_normal_form(m);
    s.D(0, 0) = 4;
    s.D(1, 1) = 2;
    CHECK_FALSE(smith_form_violation(m, s).empty());
  }

  TEST_CASE("hermite normal form") {
    const IntMatrix h = hermite_normal_form(mat({{4, 6}, {2, 2}, {6, 8}}));
    CHECK(h == mat({{2, 0}, {0, 2}}));
    Sampler rng(32);
    for (int trial = 0; trial < 20; ++trial) {
      const IntMatrix m = random_matrix(rng, 3, 3, 20);
      const IntMatrix hm = hermite_normal_form(m);
      CHECK(hm.rows() == rank(m));
      CHECK(invariant_factors(hm) == invariant_factors(m));
      for (Eigen::Index i = 0; i < hm.rows(); ++i) {
        for (Eigen::Index j = 0; j < i; ++j) CHECK(hm(i, j) == 0);
      }
    }
  }

  TEST_CASE("abelian groups") {
    CHECK(AbelianGroup::from_orders(0, {2, 3}) == AbelianGroup::from_orders(0, {6}));
    CHECK(AbelianGroup::from_orders(0, {2, 2}).torsion().size() == 2);
    CHECK(AbelianGroup::from_orders(1, {1, 0}).free_rank() == 2);
    CHECK(to_string(AbelianGroup::from_orders(2, {10})) == "Z^2 (+) Z/10");
    CHECK(to_string(AbelianGroup::from_orders(1, {})) == "Z");
    CHECK(to_string(AbelianGroup()) == "0");
    CHECK(AbelianGroup::from_orders(0, {4, 6}).torsion_order() == 24);
  }

  TEST_CASE("congruence sublattices") {
    const Congruence c3{vec({1, 1}), 3};
    const CharacterLattice l3 = congruence_sublattice(2, std::span(&c3, 1));
    CHECK(l3.index() == 3);
    CHECK(l3.contains(vec({1, -1})));
    CHECK(l3.contains(vec({0, 3})));
    CHECK_FALSE(l3.contains(vec({1, 0})));

    const Congruence c1{vec({1}), 1};
    const CharacterLattice l1 = congruence_sublattice(1, std::span(&c1, 1));
    CHECK(l1.index() == 1);
    CHECK(l1.basis() == mat({{1}}));

    const Congruence c2{vec({1, 1}), 2};
    const CharacterLattice l2 = congruence_sublattice(2, std::span(&c2, 1));
    CHECK(l2.index() == 2);
    CHECK(l2.contains(vec({1, 1})));
    CHECK_FALSE(l2.contains(vec({1, 0})));
    try {
      l2.coordinates(vec({1, 0}));
      FAIL("coordinates of a non-member");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotInSublattice);
    }
  }

  TEST_CASE("membership agrees with the congruence") {
    Sampler rng(33);
    for (int trial = 0; trial < 15; ++trial) {
      const long m = rng.uniform(1, 9);
      const Congruence c{vec({rng.uniform(-5, 5), rng.uniform(-5, 5)}), m};
      const CharacterLattice l = congruence_sublattice(2, std::span(&c, 1));
      for (long i = -6; i <= 6; ++i) {
        for (long j = -6; j <= 6; ++j) {
          const BigInt value = c.coeffs(0) * i + c.coeffs(1) * j;
          const bool divisible = mpz_divisible_p(value.get_mpz_t(), c.modulus.get_mpz_t()) != 0;
          CHECK(l.contains(vec({i, j})) == divisible);
        }
      }
    }
  }

  TEST_CASE("lattice quotients") {
    const Congruence c3{vec({1, 1}), 3};
    const CharacterLattice l3 = congruence_sublattice(2, std::span(&c3, 1));
    CHECK(lattice_quotient(l3, mat({{30, 30}})) == AbelianGroup::from_orders(1, {10}));

    const CharacterLattice z2(IntMatrix::Identity(2, 2));
    CHECK(lattice_quotient(z2, mat({{1, 0}})) == AbelianGroup::from_orders(1, {}));
    CHECK(lattice_quotient(z2, mat({{2, 0}, {0, 3}})) == AbelianGroup::from_orders(0, {6}));
    CHECK_THROWS_AS(lattice_quotient(l3, mat({{1, 0}})), Error);
  }

  TEST_CASE("finite quotients match coset enumeration") {
    const std::vector<std::int64_t> probes{2, 3, 4, 6, 12};
    const auto six = oracle::enumerate_cosets({{2, 0}, {0, 3}}, 2, 6, probes);
    CHECK(six.order == 6);
    CHECK(six.killed_by == std::vector<std::int64_t>{2, 3, 2, 6, 6});

    Sampler rng(34);
    for (int trial = 0; trial < 12; ++trial) {
      IntMatrix gens = random_matrix(rng, 2, 2, 6);
      BigInt det = abs(oracle::laplace_det(rows_of(gens)));
      if (det == 0 || det > 60) continue;
      const AbelianGroup q = quotient_of_free(2, gens);
      std::vector<std::vector<std::int64_t>> g;
      for (Eigen::Index i = 0; i < 2; ++i) g.push_back({to_int64(gens(i, 0)), to_int64(gens(i, 1))});
      std::vector<std::int64_t> ms;
      for (std::int64_t m = 1; m <= to_int64(det); ++m) ms.push_back(m);
      const auto counts = oracle::enumerate_cosets(g, 2, to_int64(det), ms);
      CHECK(q.torsion_order() == counts.order);
      for (std::size_t k = 0; k < ms.size(); ++k) {
        std::int64_t expected = 1;
        for (const auto& d : q.torsion()) expected *= oracle::gcd64(ms[k], to_int64(d));
        CHECK(counts.killed_by[k] == expected);
      }
    }
  }
}

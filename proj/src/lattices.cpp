#include "cyclicpic/lattices.hpp"

#include <algorithm>

#include "cyclicpic/error.hpp"
#include "cyclicpic/linalg.hpp"

namespace cyclicpic {

namespace {

using Index = Eigen::Index;

// rows(i) -= q * rows(t), touching only the columns where rows(t) is nonzero.
void row_axpy(IntMatrix& a, Index i, Index t, const BigInt& q) {
  for (Index c = 0; c < a.cols(); ++c) {
    if (sgn(a(t, c)) != 0) a(i, c) -= q * a(t, c);
  }
}

void col_axpy(IntMatrix& a, Index j, Index t, const BigInt& q) {
  for (Index r = 0; r < a.rows(); ++r) {
    if (sgn(a(r, t)) != 0) a(r, j) -= q * a(r, t);
  }
}

// Brings `a` to Smith form in place. U and V, when given, accumulate the row
// and column operations.
void smith_reduce(IntMatrix& a, IntMatrix* u, IntMatrix* v) {
  const Index m = a.rows();
  const Index n = a.cols();
  BigInt q;
  for (Index t = 0; t < std::min(m, n); ++t) {
    while (true) {
      Index pi = -1;
      Index pj = -1;
      for (Index j = t; j < n && !(pi >= 0 && abs(a(pi, pj)) == 1); ++j) {
        for (Index i = t; i < m; ++i) {
          if (sgn(a(i, j)) == 0) continue;
          if (pi < 0 || abs(a(i, j)) < abs(a(pi, pj))) {
            pi = i;
            pj = j;
            if (abs(a(i, j)) == 1) break;
          }
        }
      }
      if (pi < 0) return;
      if (pi != t) {
        a.row(t).swap(a.row(pi));
        if (u) u->row(t).swap(u->row(pi));
      }
      if (pj != t) {
        a.col(t).swap(a.col(pj));
        if (v) v->col(t).swap(v->col(pj));
      }
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(a, i, t, q);
        if (u) row_axpy(*u, i, t, q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(a, j, t, q);
        if (v) col_axpy(*v, j, t, q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      Index bad_row = -1;
      if (abs(a(t, t)) != 1) {
        for (Index i = t + 1; i < m && bad_row < 0; ++i) {
          for (Index j = t + 1; j < n; ++j) {
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
              bad_row = i;
              break;
            }
          }
        }
      }
      if (bad_row < 0) break;
      a.row(t) += a.row(bad_row);
      if (u) u->row(t) += u->row(bad_row);
    }
    if (sgn(a(t, t)) < 0) {
      a.row(t) = -a.row(t);
      if (u) u->row(t) = -u->row(t);
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::Identity(m.rows(), m.rows()), m, IntMatrix::Identity(m.cols(), m.cols())};
  smith_reduce(s.D, &s.U, &s.V);
  return s;
}

std::string smith_form_violation(const IntMatrix& m, const SmithForm& s) {
  if (s.U.rows() != m.rows() || s.U.cols() != m.rows() || s.V.rows() != m.cols() ||
      s.V.cols() != m.cols() || s.D.rows() != m.rows() || s.D.cols() != m.cols()) {
    return "shapes";
  }
  if (s.U * m * s.V != s.D) return "U*M*V != D";
  if (abs(bareiss_determinant(s.U)) != 1) return "U is not unimodular";
  if (abs(bareiss_determinant(s.V)) != 1) return "V is not unimodular";
  BigInt prev = 1;
  for (Index i = 0; i < s.D.rows(); ++i) {
    for (Index j = 0; j < s.D.cols(); ++j) {
      if (i != j && sgn(s.D(i, j)) != 0) return "D is not diagonal";
    }
  }
  for (Index i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i) {
    const BigInt& d = s.D(i, i);
    if (sgn(d) < 0) return "negative diagonal entry";
    if (sgn(prev) == 0 ? sgn(d) != 0 : !mpz_divisible_p(d.get_mpz_t(), prev.get_mpz_t())) {
      return "divisibility chain broken";
    }
    prev = d;
  }
  return {};
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  IntMatrix a = m;
  smith_reduce(a, nullptr, nullptr);
  std::vector<BigInt> out;
  for (Index i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (sgn(a(i, i)) != 0) out.push_back(a(i, i));
  }
  return out;
}

Eigen::Index rank(const IntMatrix& m) { return static_cast<Index>(invariant_factors(m).size()); }

IntMatrix hermite_normal_form(const IntMatrix& rows) {
  IntMatrix b = rows;
  Index r = 0;
  BigInt q;
  for (Index c = 0; c < b.cols() && r < b.rows(); ++c) {
    while (true) {
      Index pivot = -1;
      for (Index i = r; i < b.rows(); ++i) {
        if (sgn(b(i, c)) != 0 && (pivot < 0 || abs(b(i, c)) < abs(b(pivot, c)))) pivot = i;
      }
      if (pivot < 0) break;
      if (pivot != r) b.row(r).swap(b.row(pivot));
      bool done = true;
      for (Index i = r + 1; i < b.rows(); ++i) {
        if (sgn(b(i, c)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), b(i, c).get_mpz_t(), b(r, c).get_mpz_t());
        row_axpy(b, i, r, q);
        if (sgn(b(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(b(r, c)) == 0) continue;
    if (sgn(b(r, c)) < 0) b.row(r) = -b.row(r);
    for (Index i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), b(i, c).get_mpz_t(), b(r, c).get_mpz_t());
      if (sgn(q) != 0) row_axpy(b, i, r, q);
    }
    ++r;
  }
  return b.topRows(r);
}

// ------------------------------------------------------------ AbelianGroup

AbelianGroup AbelianGroup::from_orders(int free_rank, std::span<const BigInt> orders) {
  AbelianGroup g;
  g.free_rank_ = free_rank;
  std::vector<BigInt> finite;
  for (const auto& o : orders) {
    if (sgn(o) == 0) {
      ++g.free_rank_;
    } else {
      finite.push_back(abs(o));
    }
  }
  IntMatrix diag = IntMatrix::Zero(static_cast<Index>(finite.size()), static_cast<Index>(finite.size()));
  for (std::size_t i = 0; i < finite.size(); ++i) diag(static_cast<Index>(i), static_cast<Index>(i)) = finite[i];
  for (auto& d : invariant_factors(diag)) {
    if (d != 1) g.torsion_.push_back(d);
  }
  return g;
}

AbelianGroup AbelianGroup::from_orders(int free_rank, std::initializer_list<long> orders) {
  std::vector<BigInt> big(orders.begin(), orders.end());
  return from_orders(free_rank, big);
}

BigInt AbelianGroup::torsion_order() const {
  BigInt n = 1;
  for (const auto& t : torsion_) n *= t;
  return n;
}

std::string to_string(const AbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank() == 1) parts.emplace_back("Z");
  if (g.free_rank() > 1) parts.push_back("Z^" + std::to_string(g.free_rank()));
  for (const auto& t : g.torsion()) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " (+) " + parts[i];
  return out;
}

AbelianGroup quotient_of_free(Eigen::Index rank, const IntMatrix& relations) {
  if (relations.rows() > 0 && relations.cols() != rank) {
    throw Error(ErrorKind::InvalidParams, "relation width does not match the rank");
  }
  auto factors = invariant_factors(relations);
  return AbelianGroup::from_orders(static_cast<int>(rank - static_cast<Index>(factors.size())),
                                   factors);
}

// -------------------------------------------------------- CharacterLattice

CharacterLattice::CharacterLattice(IntMatrix basis_rows) : basis_(hermite_normal_form(basis_rows)) {
  smith_ = smith_normal_form(basis_);
}

IntRowVector CharacterLattice::coordinates(const IntRowVector& v) const {
  if (v.cols() != ambient_rank()) {
    throw Error(ErrorKind::InvalidParams, "vector has the wrong length for this lattice");
  }
  // U B V = D, so x B = v  <=>  (x U^-1) D = v V.
  IntRowVector w = v * smith_.V;
  IntRowVector y = IntRowVector::Zero(rank());
  for (Index i = 0; i < w.cols(); ++i) {
    if (i < rank()) {
      if (!mpz_divisible_p(w(i).get_mpz_t(), smith_.D(i, i).get_mpz_t())) {
        throw Error(ErrorKind::NotInSublattice, "vector is not in the lattice");
      }
      y(i) = exact_quotient(w(i), smith_.D(i, i));
    } else if (sgn(w(i)) != 0) {
      throw Error(ErrorKind::NotInSublattice, "vector is not in the span of the lattice");
    }
  }
  IntRowVector x = y * smith_.U;
  if (x * basis_ != v) throw Error(ErrorKind::InternalInconsistency, "lattice coordinates");
  return x;
}

bool CharacterLattice::contains(const IntRowVector& v) const {
  try {
    coordinates(v);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInSublattice) throw;
    return false;
  }
}

BigInt CharacterLattice::index() const {
  if (rank() != ambient_rank()) throw Error(ErrorKind::InvalidParams, "lattice is not of full rank");
  return abs(bareiss_determinant(basis_));
}

CharacterLattice congruence_sublattice(Eigen::Index ambient_rank,
                                       std::span<const Congruence> congruences) {
  const auto q = static_cast<Index>(congruences.size());
  IntMatrix m = IntMatrix::Zero(q, ambient_rank + q);
  for (Index i = 0; i < q; ++i) {
    const auto& c = congruences[static_cast<std::size_t>(i)];
    if (c.coeffs.cols() != ambient_rank) {
      throw Error(ErrorKind::InvalidParams, "congruence has the wrong number of coefficients");
    }
    if (c.modulus < 1) throw Error(ErrorKind::InvalidParams, "congruence modulus must be >= 1");
    m.block(i, 0, 1, ambient_rank) = c.coeffs;
    m(i, ambient_rank + i) = c.modulus;
  }
  // Integer kernel of [C | diag(m)], projected to the first coordinates.
  SmithForm s = smith_normal_form(m);
  Index r = 0;
  while (r < std::min(s.D.rows(), s.D.cols()) && sgn(s.D(r, r)) != 0) ++r;
  IntMatrix kernel = s.V.rightCols(s.V.cols() - r).transpose();
  return CharacterLattice(kernel.leftCols(ambient_rank));
}

AbelianGroup lattice_quotient(const CharacterLattice& lattice, const IntMatrix& generators) {
  IntMatrix coords(generators.rows(), lattice.rank());
  for (Index i = 0; i < generators.rows(); ++i) coords.row(i) = lattice.coordinates(generators.row(i));
  return quotient_of_free(lattice.rank(), coords);
}

}  // namespace cyclicpic

#pragma once

// Integer lattices: Smith and Hermite normal forms, congruence sublattices and
// finitely generated abelian groups.

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cyclicpic/numeric.hpp"

namespace cyclicpic {

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, d_1 | d_2 | ... with d_i >= 0
  IntMatrix V;  // unimodular, cols x cols
};

/// U * M * V == D.
SmithForm smith_normal_form(const IntMatrix& m);

/// Empty when U * M * V == D, U and V are unimodular and D is a diagonal
/// divisibility chain; otherwise the first failed condition.
std::string smith_form_violation(const IntMatrix& m, const SmithForm& s);

/// Nonzero diagonal entries of the Smith form, without computing transforms.
std::vector<BigInt> invariant_factors(const IntMatrix& m);
Eigen::Index rank(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice; zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& rows);

/// Finitely generated abelian group Z^free_rank (+) Z/t_1 (+) ... (+) Z/t_k
/// with 1 < t_1 | t_2 | ... | t_k.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Any list of cyclic orders; 0 means an infinite cyclic factor, and 1 is
  /// dropped. The torsion is brought into invariant-factor form.
  static AbelianGroup from_orders(int free_rank, std::span<const BigInt> orders);
  static AbelianGroup from_orders(int free_rank, std::initializer_list<long> orders);

  int free_rank() const { return free_rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  BigInt torsion_order() const;
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  int free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

/// `Z^k (+) Z/d1 (+) ...`, `Z` for rank one, `0` for the trivial group.
std::string to_string(const AbelianGroup& g);

/// Z^rank modulo the row span of `relations`.
AbelianGroup quotient_of_free(Eigen::Index rank, const IntMatrix& relations);

struct Congruence {
  IntRowVector coeffs;
  BigInt modulus;  // >= 1
};

/// A lattice L inside Z^ambient_rank, stored by a basis in Hermite normal form.
class CharacterLattice {
 public:
  explicit CharacterLattice(IntMatrix basis_rows);

  Eigen::Index ambient_rank() const { return basis_.cols(); }
  Eigen::Index rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  /// Coordinates x with x * basis() == v; throws Error(NotInSublattice).
  IntRowVector coordinates(const IntRowVector& v) const;
  bool contains(const IntRowVector& v) const;
  /// [Z^n : L] for full-rank L; throws Error(InvalidParams) otherwise.
  BigInt index() const;

 private:
  IntMatrix basis_;
  SmithForm smith_;
};

/// { v in Z^ambient_rank : c . v == 0 mod m for every congruence }.
CharacterLattice congruence_sublattice(Eigen::Index ambient_rank,
                                       std::span<const Congruence> congruences);

/// L / <generators>, generators given as rows in ambient coordinates. Throws
/// Error(NotInSublattice) if a generator is not in L.
AbelianGroup lattice_quotient(const CharacterLattice& lattice, const IntMatrix& generators);

}  // namespace cyclicpic

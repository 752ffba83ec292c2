#pragma once

// Picard groups of the stacks of n-pointed uniform cyclic covers of P^1 of
// degree r and genus g, assembled from a character-lattice computation on the
// far locus and the lattice of boundary divisor classes Z^{i,j,l}.

#include <string>
#include <vector>

#include "cyclicpic/lattices.hpp"
#include "cyclicpic/numeric.hpp"
#include "cyclicpic/report.hpp"

namespace cyclicpic {

struct CoverParams {
  int r = 0;
  int g = 0;
  int n = 0;
  int d = 0;
  int rd() const { return r * d; }
  friend bool operator==(const CoverParams&, const CoverParams&) = default;
};

/// d = (2g - 2 + 2r) / (r(r-1)). Throws Error(InvalidParams) for r < 2, g < 2 or
/// n < 0, and Error(EmptyStack) when d is not a positive integer.
CoverParams make_params(int r, int g, int n);
/// The inverse direction, g = (r(r-1)d + 2 - 2r) / 2; same errors.
CoverParams params_from_degree(int r, int d, int n);

/// n = 0: index d/2 (d even) or d (d odd) in Z; n = 1, 2: {(i,j) : d | i+j} in
/// Z^2; n >= 3: dZ in Z.
CharacterLattice character_lattice_for(const CoverParams& params);

/// Weight of the discriminant divisor in the ambient character group.
IntRowVector delta_class_for(const CoverParams& params);

/// Picard group of the far locus. For n > rd+1 this is Z/2r(rd-1) directly.
AbelianGroup picard_far(const CoverParams& params);

/// Closed forms: Z/r(rd-1)gcd(d,2) for n = 0, Z (+) that for n = 1, 2 and
/// Z/2r(rd-1) for n >= 3.
AbelianGroup picard_far_closed_form(const CoverParams& params);
AbelianGroup picard_closed_form(const CoverParams& params);

struct DivisorIndex {
  int i = 0;
  int j = 0;
  int l = 0;
  friend bool operator==(const DivisorIndex&, const DivisorIndex&) = default;
};

/// Column order of the relation matrix: pairs i < j lexicographically, then l.
std::vector<DivisorIndex> divisor_indices(int r, int n);
int column_of(int r, int n, const DivisorIndex& index);
/// "Z^{i,j}" for r = 2, "Z^{i,j,l}" otherwise.
std::string divisor_label(int r, const DivisorIndex& index);

/// One row per pair 2 <= i < j <= n:
/// [Z^{i,j}] - [Z^{1,i}] - [Z^{1,j}] - [Z^{2,n}] + [Z^{1,2}] + [Z^{1,n}] = 0,
/// with [Z^{i,j}] = sum_l [Z^{i,j,l}]. The (2,n) row is zero.
IntMatrix divisor_relation_matrix(int r, int n);

enum class TorsionOrigin { PullbackFromUnpointed, SquareRootGenerator };
std::string to_string(TorsionOrigin origin);

struct PicardResult {
  CoverParams params;
  AbelianGroup group;
  AbelianGroup far_group;
  /// Divisor-class labels followed by "far generator" when the far locus
  /// contributes a free summand.
  std::vector<std::string> free_basis;
  /// False for r >= 3, where the divisor labels are one choice among many.
  bool free_basis_canonical = true;
  TorsionOrigin torsion_origin = TorsionOrigin::PullbackFromUnpointed;
};

/// Throws Error(InternalInconsistency) if the lattice computation disagrees
/// with the closed form or the divisor quotient has torsion.
PicardResult picard_group(const CoverParams& params);

/// C(n-3,2) + 2(n-3) == n(n-3)/2 == C(n,2) - n == rank of the relation matrix
/// for r = 2, 3, 4.
bool unit_count_check(int n);

/// Smith form contract on random matrices, far groups and full groups against
/// the closed forms for n = 0..rd+1, relation ranks, freeness and stability
/// for n = 3..10.
Report verify_lattice_properties(int r, int d, int trials, std::uint64_t seed);

}  // namespace cyclicpic

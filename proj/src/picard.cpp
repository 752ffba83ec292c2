#include "cyclicpic/picard.hpp"

#include <algorithm>
#include <numeric>

#include "cyclicpic/error.hpp"
#include "cyclicpic/linalg.hpp"
#include "cyclicpic/random.hpp"

namespace cyclicpic {

namespace {

void check_basic(int r, int n) {
  if (r < 2) throw Error(ErrorKind::InvalidParams, "r must be at least 2");
  if (n < 0) throw Error(ErrorKind::InvalidParams, "n must be non-negative");
}

IntRowVector row_of(std::initializer_list<long> values) {
  IntRowVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (long x : values) v(k++) = x;
  return v;
}

// Columns Z^{i,j,1} with 2 <= i < j <= n and (i,j) != (2,n) are the ones each
// nonzero relation row solves for; the remaining columns are a basis of the
// quotient.
bool solved_column(int n, const DivisorIndex& idx) {
  return idx.l == 1 && idx.i >= 2 && !(idx.i == 2 && idx.j == n);
}

}  // namespace

CoverParams make_params(int r, int g, int n) {
  check_basic(r, n);
  if (g < 2) throw Error(ErrorKind::InvalidParams, "g must be at least 2");
  const long num = 2L * g - 2 + 2L * r;
  const long den = static_cast<long>(r) * (r - 1);
  if (num % den != 0) {
    throw Error(ErrorKind::EmptyStack, "empty stack: d not integral (" + std::to_string(den) +
                                           "d = " + std::to_string(num) + ")");
  }
  return {r, g, n, static_cast<int>(num / den)};
}

CoverParams params_from_degree(int r, int d, int n) {
  check_basic(r, n);
  if (d < 1) throw Error(ErrorKind::InvalidParams, "d must be at least 1");
  const long twice_g = static_cast<long>(r) * (r - 1) * d + 2 - 2L * r;
  if (twice_g < 4) {
    throw Error(ErrorKind::InvalidParams, "r=" + std::to_string(r) + ", d=" + std::to_string(d) +
                                              " gives genus below 2");
  }
  return make_params(r, static_cast<int>(twice_g / 2), n);
}

CharacterLattice character_lattice_for(const CoverParams& params) {
  const int d = params.d;
  if (params.n == 0) {
    const int index = d % 2 == 0 ? d / 2 : d;
    Congruence c{row_of({1}), index};
    return congruence_sublattice(1, std::span<const Congruence>(&c, 1));
  }
  if (params.n <= 2) {
    Congruence c{row_of({1, 1}), d};
    return congruence_sublattice(2, std::span<const Congruence>(&c, 1));
  }
  Congruence c{row_of({1}), d};
  return congruence_sublattice(1, std::span<const Congruence>(&c, 1));
}

IntRowVector delta_class_for(const CoverParams& params) {
  const long rd = params.rd();
  const long w = rd * (rd - 1);
  if (params.n == 0) return row_of({w});
  if (params.n <= 2) return row_of({w, w});
  return row_of({2 * w});
}

AbelianGroup picard_far(const CoverParams& params) {
  const long rd = params.rd();
  if (params.n > rd + 1) return AbelianGroup::from_orders(0, {2L * params.r * (rd - 1)});
  return lattice_quotient(character_lattice_for(params), delta_class_for(params));
}

AbelianGroup picard_far_closed_form(const CoverParams& params) {
  const long rd = params.rd();
  const long unpointed = params.r * (rd - 1) * std::gcd(params.d, 2);
  if (params.n == 0) return AbelianGroup::from_orders(0, {unpointed});
  if (params.n <= 2) return AbelianGroup::from_orders(1, {unpointed});
  return AbelianGroup::from_orders(0, {2L * params.r * (rd - 1)});
}

AbelianGroup picard_closed_form(const CoverParams& params) {
  const auto far = picard_far_closed_form(params);
  const int n = params.n;
  int divisor_rank = 0;
  if (n == 2) divisor_rank = params.r - 1;
  if (n >= 3) divisor_rank = static_cast<int>((params.r - 2) * binomial(n, 2) + n);
  return AbelianGroup::from_orders(far.free_rank() + divisor_rank, far.torsion());
}

std::vector<DivisorIndex> divisor_indices(int r, int n) {
  std::vector<DivisorIndex> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int l = 1; l < r; ++l) out.push_back({i, j, l});
    }
  }
  return out;
}

int column_of(int r, int n, const DivisorIndex& idx) {
  if (idx.i < 1 || idx.i >= idx.j || idx.j > n || idx.l < 1 || idx.l >= r) {
    throw Error(ErrorKind::OutOfRange, "no divisor Z^{" + std::to_string(idx.i) + "," +
                                           std::to_string(idx.j) + "," + std::to_string(idx.l) + "}");
  }
  int pair = 0;
  for (int a = 1; a < idx.i; ++a) pair += n - a;
  pair += idx.j - idx.i - 1;
  return pair * (r - 1) + (idx.l - 1);
}

std::string divisor_label(int r, const DivisorIndex& idx) {
  std::string out = "Z^{" + std::to_string(idx.i) + "," + std::to_string(idx.j);
  if (r > 2) out += "," + std::to_string(idx.l);
  return out + "}";
}

IntMatrix divisor_relation_matrix(int r, int n) {
  if (r < 2 || n < 2) throw Error(ErrorKind::InvalidParams, "relations need r >= 2 and n >= 2");
  const auto cols = static_cast<Eigen::Index>((r - 1) * binomial(n, 2));
  const auto rows = static_cast<Eigen::Index>(binomial(n - 1, 2));
  IntMatrix m = IntMatrix::Zero(rows, cols);
  Eigen::Index row = 0;
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++row) {
      const std::pair<std::pair<int, int>, int> terms[] = {
          {{i, j}, 1}, {{1, i}, -1}, {{1, j}, -1}, {{2, n}, -1}, {{1, 2}, 1}, {{1, n}, 1}};
      for (const auto& [pair, sign] : terms) {
        for (int l = 1; l < r; ++l) m(row, column_of(r, n, {pair.first, pair.second, l})) += sign;
      }
    }
  }
  return m;
}

std::string to_string(TorsionOrigin origin) {
  return origin == TorsionOrigin::PullbackFromUnpointed ? "pullback_from_unpointed"
                                                        : "square_root_generator";
}

PicardResult picard_group(const CoverParams& params) {
  const int r = params.r;
  const int n = params.n;
  PicardResult result;
  result.params = params;
  result.far_group = picard_far(params);

  int divisor_rank = 0;
  if (n >= 2) {
    const IntMatrix relations = divisor_relation_matrix(r, n);
    const auto factors = invariant_factors(relations);
    for (const auto& f : factors) {
      if (f != 1) throw Error(ErrorKind::InternalInconsistency, "divisor class quotient has torsion");
    }
    divisor_rank = static_cast<int>(relations.cols()) - static_cast<int>(factors.size());

    const auto indices = divisor_indices(r, n);
    std::vector<Eigen::Index> solved_cols;
    std::vector<Eigen::Index> nonzero_rows;
    for (std::size_t c = 0; c < indices.size(); ++c) {
      if (solved_column(n, indices[c])) {
        solved_cols.push_back(static_cast<Eigen::Index>(c));
      } else {
        result.free_basis.push_back(divisor_label(r, indices[c]));
      }
    }
    for (Eigen::Index i = 0; i < relations.rows(); ++i) {
      if (!relations.row(i).isZero()) nonzero_rows.push_back(i);
    }
    IntMatrix square(static_cast<Eigen::Index>(nonzero_rows.size()),
                     static_cast<Eigen::Index>(solved_cols.size()));
    for (std::size_t a = 0; a < nonzero_rows.size(); ++a) {
      for (std::size_t b = 0; b < solved_cols.size(); ++b) {
        square(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = relations(nonzero_rows[a], solved_cols[b]);
      }
    }
    const auto square_factors = invariant_factors(square);
    bool unimodular = square.rows() == square.cols() &&
                      static_cast<Eigen::Index>(square_factors.size()) == square.rows();
    for (const auto& f : square_factors) unimodular = unimodular && f == 1;
    if (!unimodular || static_cast<int>(result.free_basis.size()) != divisor_rank) {
      throw Error(ErrorKind::InternalInconsistency, "chosen divisor classes are not a basis");
    }
  }
  if (result.far_group.free_rank() == 1) result.free_basis.emplace_back("far generator");
  result.free_basis_canonical = r == 2;

  result.group = AbelianGroup::from_orders(divisor_rank + result.far_group.free_rank(),
                                           result.far_group.torsion());
  if (result.group != picard_closed_form(params)) {
    throw Error(ErrorKind::InternalInconsistency,
                "lattice computation gives " + to_string(result.group) + " but the closed form is " +
                    to_string(picard_closed_form(params)));
  }
  result.torsion_origin = (n >= 3 && params.d % 2 == 1) ? TorsionOrigin::SquareRootGenerator
                                                        : TorsionOrigin::PullbackFromUnpointed;
  return result;
}

bool unit_count_check(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParams, "unit count needs n >= 3");
  const std::int64_t units = binomial(n - 3, 2) + 2L * (n - 3);
  const std::int64_t half = static_cast<std::int64_t>(n) * (n - 3) / 2;
  const std::int64_t diff = binomial(n, 2) - n;
  if (units != half || half != diff) return false;
  for (int r = 2; r <= 4; ++r) {
    if (rank(divisor_relation_matrix(r, n)) != half) return false;
  }
  return true;
}

Report verify_lattice_properties(int r, int d, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::InvalidParams, "trials must be at least 1");
  const CoverParams base = params_from_degree(r, d, 0);
  Report report;
  report.header = "lattice r=" + std::to_string(r) + " d=" + std::to_string(d) + " g=" +
                  std::to_string(base.g) + " trials=" + std::to_string(trials) + " seed=" +
                  std::to_string(seed);

  Sampler sampler(seed);
  int snf_failures = 0;
  std::string first_failure;
  for (int t = 0; t < trials; ++t) {
    const auto rows = sampler.uniform(1, 8);
    const auto cols = sampler.uniform(1, 8);
    IntMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = static_cast<long>(sampler.uniform(-50, 50));
    }
    SmithForm s = smith_normal_form(m);
    std::string why = smith_form_violation(m, s);
    if (why.empty() && rows == cols) {
      BigInt product = 1;
      for (Eigen::Index i = 0; i < rows; ++i) product *= s.D(i, i);
      if (abs(bareiss_determinant(m)) != product) why = "|det M| != prod d_i";
    }
    if (!why.empty()) {
      if (first_failure.empty()) first_failure = why;
      ++snf_failures;
    }
  }
  report.add("Smith form U*M*V = D, unimodular U and V, divisibility chain", snf_failures == 0,
             std::to_string(trials - snf_failures) + "/" + std::to_string(trials) + " matrices" +
                 (first_failure.empty() ? "" : ", " + first_failure));

  const int rd = r * d;
  std::vector<std::string> far_bad;
  std::vector<std::string> full_bad;
  for (int n = 0; n <= rd + 1; ++n) {
    CoverParams params = base;
    params.n = n;
    if (picard_far(params) != picard_far_closed_form(params)) far_bad.push_back(std::to_string(n));
    if (n >= 3 && lattice_quotient(character_lattice_for(params), delta_class_for(params)) !=
                      AbelianGroup::from_orders(0, {2L * r * (rd - 1)})) {
      far_bad.push_back(std::to_string(n) + " (far branch)");
    }
    if (n <= 10) {
      try {
        if (picard_group(params).group != picard_closed_form(params)) full_bad.push_back(std::to_string(n));
      } catch (const Error&) {
        full_bad.push_back(std::to_string(n));
      }
    }
  }
  report.add("far group from the character lattice matches the closed form", far_bad.empty(),
             far_bad.empty() ? "n = 0.." + std::to_string(rd + 1) : "n = " + far_bad.front());
  report.add("Picard group matches the closed form", full_bad.empty(),
             full_bad.empty() ? "n = 0.." + std::to_string(std::min(rd + 1, 10)) : "n = " + full_bad.front());

  std::vector<std::string> rank_bad;
  std::vector<std::string> free_bad;
  std::vector<std::string> stable_bad;
  for (int n = 3; n <= 10; ++n) {
    const IntMatrix rel = divisor_relation_matrix(r, n);
    const auto factors = invariant_factors(rel);
    if (static_cast<std::int64_t>(factors.size()) != binomial(n, 2) - n || !unit_count_check(n)) {
      rank_bad.push_back(std::to_string(n));
    }
    bool free = std::all_of(factors.begin(), factors.end(), [](const BigInt& f) { return f == 1; });
    if (!free || quotient_of_free(rel.cols(), rel) !=
                     AbelianGroup::from_orders(static_cast<int>((r - 2) * binomial(n, 2) + n), {})) {
      free_bad.push_back(std::to_string(n));
    }
    if (n < 10) {
      const IntMatrix next = divisor_relation_matrix(r, n + 1);
      IntMatrix stacked(next.rows() + rel.rows(), next.cols());
      stacked.topRows(next.rows()) = next;
      stacked.bottomRows(rel.rows()).setZero();
      for (const auto& idx : divisor_indices(r, n)) {
        stacked.bottomRows(rel.rows()).col(column_of(r, n + 1, idx)) = rel.col(column_of(r, n, idx));
      }
      if (rank(stacked) != rank(next)) stable_bad.push_back(std::to_string(n));
    }
  }
  report.add("relation matrix has rank C(n,2) - n = n(n-3)/2", rank_bad.empty(),
             rank_bad.empty() ? "n = 3..10" : "n = " + rank_bad.front());
  report.add("divisor quotient is free of rank (r-2)C(n,2) + n", free_bad.empty(),
             free_bad.empty() ? "n = 3..10" : "n = " + free_bad.front());
  report.add("relations at n stay valid at n+1", stable_bad.empty(),
             stable_bad.empty() ? "n = 3..9" : "n = " + stable_bad.front());
  return report;
}

}  // namespace cyclicpic

#pragma once

#include <optional>
#include <vector>

#include "qhr/basis.hpp"
#include "qhr/brst_element.hpp"
#include "qhr/series.hpp"
#include "qhr/setup.hpp"
#include "qhr/sparse_matrix.hpp"

namespace qhr {

// Q_c = sum_i (mu_i + c_i) (x) psi*_i + 1/2 sum chi^k_ij (x) psi_k psi*_i psi*_j
BRSTElement build_Qc(const ReductionSetup& s);

// [Q, a] = Qa - (-1)^{|a|} aQ, extended additively over the parity split.
BRSTElement apply_ad_Qc(const BRSTElement& Qc, const BRSTElement& a);

// Ghost-raising and ghost-lowering halves of ad Q_c; their sum equals
// apply_ad_Qc on any element.
BRSTElement apply_d_plus(const ReductionSetup& s, const BRSTElement& a);
BRSTElement apply_d_minus(const ReductionSetup& s, const BRSTElement& a);

// Matrix of ad Q_c from the (ghost_degree, weight, <=domain_bound)
// truncation to the (ghost_degree+1, weight, <=codomain_bound) one.
// Throws ContainmentViolation when an image term falls outside the codomain.
SparseMatrix assemble_differential(const ReductionSetup& s,
                                   const BRSTElement& Qc, int ghost_degree,
                                   const std::vector<long>& lambda,
                                   int domain_bound, int codomain_bound);

struct CohomologyCell {
  int degree = 0;  // even filtration degree k
  long dim = 0;
  bool stable = false;  // agrees with the bound-(N-2) computation
};

struct CohomologyReport {
  int ghost_degree = 0;
  std::vector<long> weight;
  int bound = 0;
  std::vector<CohomologyCell> cells;
};

// Truncated cohomology of ad Q_c in one ghost degree. The kernel is cut at
// each even k <= bound; the image is intersected with the degree <= k part
// (rank minus rank of the rows above degree k), which removes boundary
// artifacts of the naive truncation.
CohomologyReport brst_cohomology(const ReductionSetup& s, const BRSTElement& Qc,
                                 int ghost_degree,
                                 const std::vector<long>& lambda, int bound);

struct ColumnPosition {
  int position = 0;  // -dim g .. 0, the psi-degree -|S|
  std::vector<CohomologyCell> cells;
};

struct ColumnReport {
  int column = 0;  // |T|
  std::vector<long> weight;
  int bound = 0;
  std::vector<ColumnPosition> positions;
};

// Cohomology of the ghost-lowering differential along one column of the
// double complex (|T| fixed, |S| varying).
ColumnReport column_cohomology(const ReductionSetup& s, int column,
                               const std::vector<long>& lambda, int bound);

// dim of the weight-lambda, degree <= k sector of D(V) modulo the right
// ideal generated by the mu_i + c_i, for each even k <= bound. Independent
// of the BRST machinery.
std::vector<long> lc_oracle(const ReductionSetup& s,
                            const std::vector<long>& lambda, int bound);

// Abelian setups only: the invariant sector is the weight-zero one.
std::vector<long> lc_invariants_oracle(const ReductionSetup& s, int bound);

struct FlatnessReport {
  bool ok = false;
  int first_failure = -1;  // degree of the first mismatch, -1 if none
  std::vector<long> actual;
  std::vector<Integer> expected;
};

// Hilbert function of C[T*V] modulo the classical moment ideal against the
// complete-intersection series (1-t^2)^g / (1-t)^{2n}, per degree up to
// bound. Certifies flatness of the classical moment map when it matches.
FlatnessReport koszul_flatness_certificate(const ReductionSetup& s, int bound);
FlatnessReport koszul_flatness_certificate(
    const std::vector<PolyElement>& moments, int n_vars, int bound);

struct LcKoszulReport {
  std::vector<long> lc_dims;              // per even degree k <= bound
  std::vector<std::vector<long>> table;   // table[n][k/2], n = 0..dim g
};

// Cohomology of the ghost-raising differential acting on L_c tensor the
// exterior algebra, abelian setups only. The differential is wedging by
// the weight, realized as honest exterior-algebra matrices.
LcKoszulReport dplus_on_Lc_cohomology(const ReductionSetup& s,
                                      const std::vector<long>& lambda,
                                      int bound);

}  // namespace qhr

#pragma once

#include <vector>

#include "qhr/brst_element.hpp"
#include "qhr/ghost.hpp"
#include "qhr/weyl.hpp"

namespace qhr {

// Basis monomial x^alpha d^beta (x) psi_S psi*_T of C(R).
struct BasisMono {
  WeylMono wm;
  GhostMono gm;

  auto operator<=>(const BasisMono&) const = default;
};

// Deterministic ordered basis of the truncation C^n_{lambda, <=N}:
// monomials with |T|-|S| = ghost_degree, |alpha|+|beta| <= degree_bound and
// torus weight lambda. Ordering is graded-lexicographic on
// (degree, alpha, beta, S, T).
std::vector<BasisMono> enumerate_basis(
    int n_vars, int g_dim, int ghost_degree, const std::vector<long>& lambda,
    const std::vector<std::vector<long>>& variable_weights, int degree_bound);

std::vector<long> monomial_weight(
    const WeylMono& m, const std::vector<std::vector<long>>& variable_weights);

}  // namespace qhr

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qhr/rational.hpp"

namespace qhr {

// Arrow out -> in; loops are rejected.
struct Arrow {
  int out;
  int in;
};

struct Quiver {
  int n_vertices = 0;
  std::vector<Arrow> arrows;
};

using DimensionVector = std::vector<int>;

Quiver make_quiver(int n_vertices, const std::vector<std::pair<int, int>>& arrows);

// Presets orient every arrow from lower to higher vertex id.
Quiver affine_a(int ell);  // cycle on ell+1 vertices; A1 is the double edge
Quiver affine_d(int ell);  // vertices 0..ell, forks at both ends

// p(v) = 1 + sum_{arrows} v_out v_in - v.v
long p_of_v(const Quiver& q, const DimensionVector& v);

// Tits form q(v) = v.v - sum_{arrows} v_out v_in, so p(v) = 1 - q(v).
long tits_form(const Quiver& q, const DimensionVector& v);

// Nonzero vectors with 0 <= a_i <= bound_i, connected support and q(a) <= 1,
// together with their negatives (positives first, then negatives, each in
// lexicographic order).
std::vector<std::vector<int>> enumerate_bounded_roots(
    const Quiver& q, const std::vector<int>& bound);

// Primitive positive generator of the radical of the symmetrized Tits form;
// throws NotAffine when the radical is not one-dimensional with a positive
// generator.
DimensionVector minimal_imaginary_root(const Quiver& q);

struct StabilityResult {
  bool ok = false;
  std::optional<std::vector<int>> witness;
};

// theta.delta = 0 and theta.alpha != 0 for all roots with entries <= 1,
// alpha != +-delta.
StabilityResult check_stability_preprojective(const Quiver& q,
                                              const DimensionVector& delta,
                                              const std::vector<Rational>& theta);

// theta.alpha != 0 for all roots of the base quiver with entries <= n.
StabilityResult check_stability_cm(const Quiver& base, int n,
                                   const std::vector<Rational>& theta);

// -delta_i + sum_{out(a)=i} delta_{in(a)}
std::vector<long> shift_vector(const Quiver& q, const DimensionVector& delta);

long flatness_dimension_target(const Quiver& q, const DimensionVector& v);

}  // namespace qhr

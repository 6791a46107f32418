#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhr/lie.hpp"
#include "qhr/quiver.hpp"
#include "qhr/weyl.hpp"

namespace qhr {

struct HypertoricData {
  std::vector<std::vector<long>> M;  // d x n integer matrix
  std::vector<Rational> theta;       // length d
  std::vector<Rational> c;           // length d
};

struct SmoothnessResult {
  bool ok = false;
  std::optional<std::vector<int>> witness;  // offending column subset J
};

// A fully assembled reduction instance: group data, classical and quantized
// moment maps, character, and the torus grading used for truncation.
struct ReductionSetup {
  int n_vars = 0;
  LieData lie;
  std::vector<PolyElement> classical_moments;
  std::vector<WeylElement> quantized_moments;
  Character character;
  // One integer weight vector per variable; the eigenvalue of
  // [mu_D(diagonal unit), x_j] on x_j. For torus setups this is the full
  // group grading, for quiver groups the grading by the maximal torus.
  std::vector<std::vector<long>> variable_weights;
  std::string provenance;  // quiver | preprojective | calogero-moser | hypertoric
  std::map<std::string, std::string> echo;
  std::vector<std::string> assumption_notes;
  std::optional<long> flatness_target;  // v.v - 1 + 2p(v), quiver setups

  int torus_rank() const {
    return variable_weights.empty()
               ? 0
               : static_cast<int>(variable_weights.front().size());
  }
};

ReductionSetup build_hypertoric_setup(const HypertoricData& h);

SmoothnessResult check_hypertoric_smoothness(const HypertoricData& h);

// Variables indexed by (arrow, row 1..v_in, col 1..v_out); quantized moments
// follow the explicit matrix-unit formula, classical moments are their
// principal symbols, the character is c = sum c_i Tr restricted to the
// retained blocks.
ReductionSetup build_quiver_setup(const Quiver& q, const DimensionVector& v,
                                  const std::vector<Rational>& theta,
                                  const std::vector<Rational>& c_pre,
                                  int distinguished_vertex);

ReductionSetup build_preprojective_setup(const Quiver& q,
                                         const std::vector<Rational>& theta,
                                         const std::vector<Rational>& c_pre);

// Base quiver augmented with an infinity vertex and arrow infinity -> 0;
// v = n delta + eps_infinity; theta and c_pre are given over the base
// vertices, the infinity components are fixed by theta.v = c.v = 0.
ReductionSetup build_cm_setup(const Quiver& base, int n,
                              const std::vector<Rational>& theta,
                              const std::vector<Rational>& c_pre);

}  // namespace qhr

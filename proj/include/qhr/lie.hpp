#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qhr/rational.hpp"

namespace qhr {

// Basis-element label: either abstract (torus A_i) or a matrix unit
// A^{(vertex)}_{pq} of a gl block.
struct UnitLabel {
  int vertex = -1;  // -1 for abstract torus generators
  int p = 0;        // 1-based row within block
  int q = 0;        // 1-based column within block
};

// Finite-dimensional Lie algebra data: structure constants
// [A_i, A_j] = sum_k chi[{i,j,k}] A_k.
struct LieData {
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::map<std::tuple<int, int, int>, Rational> structure_constants;
  std::vector<UnitLabel> units;
  // Retained (vertex, block size) pairs; empty for abstract tori.
  std::vector<std::pair<int, int>> block_structure;

  bool is_abelian() const { return structure_constants.empty(); }
  Rational chi(int i, int j, int k) const;
};

struct Character {
  std::vector<Rational> values;
};

LieData torus_lie(int d);

// Sum of gl blocks modulo the diagonal center, realized by deleting the
// distinguished size-1 block. block_sizes are indexed by vertex id.
LieData gl_sum_lie(const std::vector<int>& block_sizes,
                   int distinguished_vertex);

// nullopt on pass; first violating triple (i, j, k) on failure.
std::optional<std::tuple<int, int, int>> jacobi_check(const LieData& L);

bool validate_character(const LieData& L, const Character& c,
                        std::string* reason = nullptr);

}  // namespace qhr

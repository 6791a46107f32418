#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhr/setup.hpp"

namespace qhr {

// Parsed contents of a sectioned key = value run configuration.
//
// [setup]
//   kind = hypertoric | preprojective | calogero-moser | quiver
//   hypertoric:      matrix = [[1,0,1],[0,1,1]]  theta = (1,2)  c = (1/3,2/7)
//   preprojective:   family = affine-a | affine-d   ell = 4  theta, c
//   calogero-moser:  family, ell, n, theta, c (over the base vertices)
//   quiver:          vertices = 3  arrows = [[0,1],[1,2]]  v = (1,1,1)
//                    distinguished = 0  theta, c
//   negative_control = duplicate-moment   (optional)
// [truncation]
//   max_degree = 6   weight = (0,0)   (weight optional)
// [output]
//   format = text | json   (optional)
struct RunConfig {
  std::string kind;
  // hypertoric
  std::vector<std::vector<long>> matrix;
  // quiver-flavored
  std::string family;
  int ell = 0;
  int n = 1;
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;
  DimensionVector v;
  int distinguished = 0;
  bool has_distinguished = false;
  // shared
  std::vector<Rational> theta;
  std::vector<Rational> c;
  std::string negative_control;

  int max_degree = 4;
  std::optional<std::vector<long>> weight;

  std::string format = "text";
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Instantiates the setup described by the config. Applies no negative
// control; callers inspect config.negative_control themselves.
ReductionSetup build_setup(const RunConfig& cfg);

// The quiver named by family/ell, for configs that carry one.
Quiver config_quiver(const RunConfig& cfg);

}  // namespace qhr

#pragma once

#include <utility>
#include <vector>

#include "qhr/rational.hpp"

namespace qhr {

// Integer coefficients of a power series truncated at degree N inclusive;
// coeffs.size() == N+1 always.
struct SeriesTruncation {
  std::vector<Integer> coeffs;

  bool operator==(const SeriesTruncation&) const = default;
};

// Each factor (d, e) stands for (1 - t^d)^e in the denominator.
SeriesTruncation expand_rational_series(
    const std::vector<Integer>& numerator,
    const std::vector<std::pair<int, int>>& denominator_factors, int N);

std::vector<Integer> poly_mul_trunc(const std::vector<Integer>& a,
                                    const std::vector<Integer>& b, int N);

}  // namespace qhr

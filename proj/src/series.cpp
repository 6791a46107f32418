#include "qhr/series.hpp"

#include "qhr/errors.hpp"

namespace qhr {

std::vector<Integer> poly_mul_trunc(const std::vector<Integer>& a,
                                    const std::vector<Integer>& b, int N) {
  std::vector<Integer> out(N + 1, 0);
  for (size_t i = 0; i < a.size() && static_cast<int>(i) <= N; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= N; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

SeriesTruncation expand_rational_series(
    const std::vector<Integer>& numerator,
    const std::vector<std::pair<int, int>>& denominator_factors, int N) {
  if (N < 0) throw Error("series truncation with negative bound");
  std::vector<Integer> c(N + 1, 0);
  for (size_t i = 0; i < numerator.size() && static_cast<int>(i) <= N; ++i)
    c[i] = numerator[i];
  // Dividing by (1 - t^d) is the running-sum recurrence c[k] += c[k-d].
  for (const auto& [d, e] : denominator_factors) {
    if (d < 1) throw Error("denominator factor with degree < 1");
    for (int rep = 0; rep < e; ++rep)
      for (int k = d; k <= N; ++k) c[k] += c[k - d];
  }
  return SeriesTruncation{std::move(c)};
}

}  // namespace qhr

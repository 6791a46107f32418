#include "qhr/basis.hpp"

#include <algorithm>
#include <functional>

namespace qhr {

std::vector<long> monomial_weight(
    const WeylMono& m, const std::vector<std::vector<long>>& w) {
  const size_t d = w.empty() ? 0 : w.front().size();
  std::vector<long> wt(d, 0);
  for (size_t j = 0; j < w.size(); ++j) {
    const long diff = m.alpha[j] - m.beta[j];
    for (size_t k = 0; k < d; ++k) wt[k] += w[j][k] * diff;
  }
  return wt;
}

namespace {

// All multi-index pairs (alpha, beta) of total degree <= N, in graded-lex
// order.
void enumerate_weyl_monos(int n_vars, int N,
                          std::vector<WeylMono>& out) {
  std::vector<WeylMono> buf;
  std::vector<int> exps(2 * n_vars, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == 2 * n_vars) {
      WeylMono m{MultiIndex(exps.begin(), exps.begin() + n_vars),
                 MultiIndex(exps.begin() + n_vars, exps.end())};
      buf.push_back(std::move(m));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[pos] = e;
      rec(pos + 1, remaining - e);
    }
    exps[pos] = 0;
  };
  rec(0, N);
  std::sort(buf.begin(), buf.end(), [](const WeylMono& a, const WeylMono& b) {
    return GradedLexLess{}(a, b);
  });
  out = std::move(buf);
}

}  // namespace

std::vector<BasisMono> enumerate_basis(
    int n_vars, int g_dim, int ghost_degree, const std::vector<long>& lambda,
    const std::vector<std::vector<long>>& variable_weights, int degree_bound) {
  std::vector<BasisMono> out;
  if (degree_bound < 0) return out;
  if (ghost_degree < -g_dim || ghost_degree > g_dim) return out;

  std::vector<GhostMono> ghosts;
  for (uint32_t S = 0; S < (1u << g_dim); ++S)
    for (uint32_t T = 0; T < (1u << g_dim); ++T) {
      GhostMono g{S, T};
      if (g.ghost_degree() == ghost_degree) ghosts.push_back(g);
    }
  std::sort(ghosts.begin(), ghosts.end());

  std::vector<WeylMono> monos;
  enumerate_weyl_monos(n_vars, degree_bound, monos);

  for (const auto& wm : monos) {
    if (monomial_weight(wm, variable_weights) != lambda) continue;
    for (const auto& gm : ghosts) out.push_back({wm, gm});
  }
  // monos are already graded-lex sorted; (S, T) varies fastest.
  return out;
}

}  // namespace qhr

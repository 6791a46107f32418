#include "qhr/lie.hpp"

#include <sstream>

#include "qhr/errors.hpp"

namespace qhr {

Rational LieData::chi(int i, int j, int k) const {
  auto it = structure_constants.find({i, j, k});
  return it == structure_constants.end() ? Rational(0) : it->second;
}

LieData torus_lie(int d) {
  if (d < 1) throw Error("torus_lie requires d >= 1");
  LieData L;
  L.dim = d;
  for (int i = 0; i < d; ++i) {
    L.basis_labels.push_back("A" + std::to_string(i + 1));
    L.units.push_back({-1, 0, 0});
  }
  return L;
}

LieData gl_sum_lie(const std::vector<int>& block_sizes,
                   int distinguished_vertex) {
  if (distinguished_vertex < 0 ||
      distinguished_vertex >= static_cast<int>(block_sizes.size()) ||
      block_sizes[distinguished_vertex] != 1)
    throw NoUnitBlock(
        "distinguished vertex must exist and have block size exactly 1");

  LieData L;
  std::map<std::tuple<int, int, int>, int> index;  // (vertex, p, q) -> basis
  for (int v = 0; v < static_cast<int>(block_sizes.size()); ++v) {
    if (v == distinguished_vertex) continue;
    const int s = block_sizes[v];
    if (s < 1) throw Error("gl_sum_lie: block size < 1");
    L.block_structure.push_back({v, s});
    for (int p = 1; p <= s; ++p)
      for (int q = 1; q <= s; ++q) {
        index[{v, p, q}] = L.dim++;
        std::ostringstream lbl;
        lbl << "A(" << v << ")_" << p << q;
        L.basis_labels.push_back(lbl.str());
        L.units.push_back({v, p, q});
      }
  }

  // [E_pq, E_rs] = delta_qr E_ps - delta_sp E_rq, blockwise.
  for (const auto& [key_i, i] : index) {
    const auto [v1, p, q] = key_i;
    for (const auto& [key_j, j] : index) {
      const auto [v2, r, s] = key_j;
      if (v1 != v2) continue;
      if (q == r) L.structure_constants[{i, j, index.at({v1, p, s})}] += 1;
      if (s == p) L.structure_constants[{i, j, index.at({v1, r, q})}] -= 1;
    }
  }
  std::erase_if(L.structure_constants,
                [](const auto& kv) { return kv.second == 0; });
  return L;
}

std::optional<std::tuple<int, int, int>> jacobi_check(const LieData& L) {
  const int d = L.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        // coefficient of A_l in [[A_i,A_j],A_k] + cyclic
        for (int l = 0; l < d; ++l) {
          Rational sum = 0;
          for (int m = 0; m < d; ++m) {
            sum += L.chi(i, j, m) * L.chi(m, k, l);
            sum += L.chi(j, k, m) * L.chi(m, i, l);
            sum += L.chi(k, i, m) * L.chi(m, j, l);
          }
          if (sum != 0) return std::make_tuple(i, j, k);
        }
      }
  return std::nullopt;
}

bool validate_character(const LieData& L, const Character& c,
                        std::string* reason) {
  if (static_cast<int>(c.values.size()) != L.dim) {
    if (reason) *reason = "character length != dim";
    return false;
  }
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      Rational sum = 0;
      for (int k = 0; k < L.dim; ++k) sum += L.chi(i, j, k) * c.values[k];
      if (sum != 0) {
        if (reason)
          *reason = "character does not vanish on [A" + std::to_string(i + 1) +
                    ", A" + std::to_string(j + 1) + "]";
        return false;
      }
    }
  // Block data: c = sum_i c_i Tr, so c is zero off the diagonal and
  // constant on each block's diagonal units.
  if (!L.block_structure.empty()) {
    for (int i = 0; i < L.dim; ++i) {
      const auto& u = L.units[i];
      if (u.p != u.q && c.values[i] != 0) {
        if (reason) *reason = "character nonzero on off-diagonal unit";
        return false;
      }
    }
    for (const auto& [v, s] : L.block_structure) {
      std::optional<Rational> diag;
      for (int i = 0; i < L.dim; ++i) {
        const auto& u = L.units[i];
        if (u.vertex != v || u.p != u.q) continue;
        if (!diag)
          diag = c.values[i];
        else if (*diag != c.values[i]) {
          if (reason) *reason = "character not constant on block diagonal";
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qhr

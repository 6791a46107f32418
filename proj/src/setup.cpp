#include "qhr/setup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qhr/errors.hpp"
#include "qhr/sparse_matrix.hpp"

namespace qhr {

namespace {

std::string format_rationals(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << format_rational(v[i]);
  }
  os << ")";
  return os.str();
}

std::string format_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

// Exact determinant of a small dense rational matrix; destroys its argument.
Rational dense_det(std::vector<std::vector<Rational>>& a) {
  const int n = static_cast<int>(a.size());
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace

ReductionSetup build_hypertoric_setup(const HypertoricData& h) {
  const int d = static_cast<int>(h.M.size());
  if (d == 0) throw DimensionMismatch("weight matrix has no rows");
  const int n = static_cast<int>(h.M.front().size());
  for (const auto& row : h.M) {
    if (static_cast<int>(row.size()) != n)
      throw DimensionMismatch("weight matrix rows have unequal length");
  }
  if (static_cast<int>(h.theta.size()) != d)
    throw DimensionMismatch("stability vector length does not match rank");
  if (static_cast<int>(h.c.size()) != d)
    throw DimensionMismatch("character length does not match rank");

  SparseMatrix mat(d, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j)
      if (h.M[i][j] != 0) mat.set(i, j, Rational(h.M[i][j]));
  if (rank(mat) != d)
    throw RankDeficient("weight matrix does not have full row rank");

  // Every maximal minor must be -1, 0 or 1.
  std::vector<int> cols(d);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    std::vector<std::vector<Rational>> sub(d, std::vector<Rational>(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) sub[r][c] = Rational(h.M[r][cols[c]]);
    const Rational det = dense_det(sub);
    if (det != 0 && det != 1 && det != -1)
      throw NotUnimodular("maximal minor " + format_rational(det) +
                          " at columns " + format_ints(cols));
    int k = d - 1;
    while (k >= 0 && cols[k] == n - d + k) --k;
    if (k < 0) break;
    ++cols[k];
    for (int j = k + 1; j < d; ++j) cols[j] = cols[j - 1] + 1;
  }

  ReductionSetup s;
  s.n_vars = n;
  s.lie = torus_lie(d);
  s.character.values = h.c;
  for (int i = 0; i < d; ++i) {
    WeylElement mu = WeylElement::zero(n);
    for (int j = 0; j < n; ++j) {
      if (h.M[i][j] == 0) continue;
      MultiIndex e(n, 0);
      e[j] = 1;
      mu.add_term(WeylMono{e, e}, Rational(h.M[i][j]));
    }
    s.quantized_moments.push_back(mu);
    s.classical_moments.push_back(mu.principal_symbol());
  }
  s.variable_weights.resize(n);
  for (int j = 0; j < n; ++j) {
    s.variable_weights[j].resize(d);
    for (int i = 0; i < d; ++i) s.variable_weights[j][i] = h.M[i][j];
  }
  s.provenance = "hypertoric";
  s.echo["rank"] = std::to_string(d);
  s.echo["n_vars"] = std::to_string(n);
  s.echo["theta"] = format_rationals(h.theta);
  s.echo["c"] = format_rationals(h.c);
  return s;
}

SmoothnessResult check_hypertoric_smoothness(const HypertoricData& h) {
  const int d = static_cast<int>(h.M.size());
  const int n = d ? static_cast<int>(h.M.front().size()) : 0;
  // theta must avoid the span of every column subset spanning a hyperplane;
  // the empty subset matters when d = 1, where only theta = 0 lies in it.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> J;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) J.push_back(j);
    SparseMatrix cols(d, static_cast<int>(J.size()));
    for (int c = 0; c < static_cast<int>(J.size()); ++c)
      for (int r = 0; r < d; ++r)
        if (h.M[r][J[c]] != 0) cols.set(r, c, Rational(h.M[r][J[c]]));
    if (rank(cols) != d - 1) continue;
    SparseMatrix aug(d, static_cast<int>(J.size()) + 1);
    for (const auto& [rc, v] : cols.entries()) aug.set(rc.first, rc.second, v);
    for (int r = 0; r < d; ++r)
      if (h.theta[r] != 0) aug.set(r, static_cast<int>(J.size()), h.theta[r]);
    if (rank(aug) == d - 1) return {false, J};
  }
  return {true, std::nullopt};
}

ReductionSetup build_quiver_setup(const Quiver& q, const DimensionVector& v,
                                  const std::vector<Rational>& theta,
                                  const std::vector<Rational>& c_pre,
                                  int distinguished_vertex) {
  const int nv = q.n_vertices;
  if (static_cast<int>(v.size()) != nv)
    throw DimensionMismatch("dimension vector length does not match quiver");
  if (static_cast<int>(theta.size()) != nv)
    throw DimensionMismatch("stability vector length does not match quiver");
  if (static_cast<int>(c_pre.size()) != nv)
    throw DimensionMismatch("character length does not match quiver");
  for (int x : v)
    if (x <= 0) throw ZeroDimensionVector("dimension vector must be positive");

  Rational cv(0);
  for (int i = 0; i < nv; ++i) cv += c_pre[i] * v[i];
  if (cv != 0)
    throw ValidationFailure(
        "character does not kill the diagonal center: c.v = " +
        format_rational(cv));

  ReductionSetup s;
  s.lie = gl_sum_lie(v, distinguished_vertex);

  // Variable layout: per arrow a, x^a_{jp} with j = 1..v_in(a) (row) and
  // p = 1..v_out(a) (column), row-major, arrows in declaration order.
  const int n_arrows = static_cast<int>(q.arrows.size());
  std::vector<int> base(n_arrows, 0);
  int n_vars = 0;
  for (int a = 0; a < n_arrows; ++a) {
    base[a] = n_vars;
    n_vars += v[q.arrows[a].in] * v[q.arrows[a].out];
  }
  s.n_vars = n_vars;
  auto var = [&](int a, int j, int p) {
    return base[a] + (j - 1) * v[q.arrows[a].out] + (p - 1);
  };

  for (int b = 0; b < s.lie.dim; ++b) {
    const UnitLabel& u = s.lie.units[b];
    WeylElement mu = WeylElement::zero(n_vars);
    for (int a = 0; a < n_arrows; ++a) {
      const Arrow& ar = q.arrows[a];
      if (ar.out == u.vertex) {
        for (int j = 1; j <= v[ar.in]; ++j) {
          MultiIndex al(n_vars, 0), be(n_vars, 0);
          al[var(a, j, u.p)] = 1;
          be[var(a, j, u.q)] = 1;
          mu.add_term(WeylMono{al, be}, Rational(1));
        }
      }
      if (ar.in == u.vertex) {
        for (int j = 1; j <= v[ar.out]; ++j) {
          MultiIndex al(n_vars, 0), be(n_vars, 0);
          al[var(a, u.q, j)] = 1;
          be[var(a, u.p, j)] = 1;
          mu.add_term(WeylMono{al, be}, Rational(-1));
        }
      }
    }
    s.quantized_moments.push_back(mu);
    s.classical_moments.push_back(mu.principal_symbol());
    s.character.values.push_back(u.p == u.q ? c_pre[u.vertex] : Rational(0));
  }

  std::string reason;
  if (!validate_character(s.lie, s.character, &reason))
    throw ValidationFailure("character validation failed: " + reason);

  // Torus grading by the retained diagonal units, in basis order.
  std::map<std::pair<int, int>, int> torus_coord;
  for (int b = 0; b < s.lie.dim; ++b) {
    const UnitLabel& u = s.lie.units[b];
    if (u.p == u.q)
      torus_coord[{u.vertex, u.p}] = static_cast<int>(torus_coord.size());
  }
  const int rank_t = static_cast<int>(torus_coord.size());
  s.variable_weights.assign(n_vars, std::vector<long>(rank_t, 0));
  for (int a = 0; a < n_arrows; ++a) {
    const Arrow& ar = q.arrows[a];
    for (int j = 1; j <= v[ar.in]; ++j) {
      for (int p = 1; p <= v[ar.out]; ++p) {
        auto& w = s.variable_weights[var(a, j, p)];
        auto out_it = torus_coord.find({ar.out, p});
        if (out_it != torus_coord.end()) w[out_it->second] += 1;
        auto in_it = torus_coord.find({ar.in, j});
        if (in_it != torus_coord.end()) w[in_it->second] -= 1;
      }
    }
  }

  s.provenance = "quiver";
  s.flatness_target = flatness_dimension_target(q, v);
  s.echo["dimension_vector"] = format_ints(v);
  s.echo["theta"] = format_rationals(theta);
  s.echo["c"] = format_rationals(c_pre);
  s.echo["n_vars"] = std::to_string(n_vars);
  s.echo["lie_dim"] = std::to_string(s.lie.dim);
  return s;
}

ReductionSetup build_preprojective_setup(const Quiver& q,
                                         const std::vector<Rational>& theta,
                                         const std::vector<Rational>& c_pre) {
  const DimensionVector delta = minimal_imaginary_root(q);
  const StabilityResult st = check_stability_preprojective(q, delta, theta);
  if (!st.ok)
    throw StabilityViolation("stability fails at root " +
                             format_ints(*st.witness));
  int distinguished = -1;
  for (int i = 0; i < q.n_vertices; ++i) {
    if (delta[i] == 1) {
      distinguished = i;
      break;
    }
  }
  if (distinguished < 0)
    throw NoUnitBlock("minimal imaginary root has no entry equal to 1");
  ReductionSetup s = build_quiver_setup(q, delta, theta, c_pre, distinguished);
  s.provenance = "preprojective";
  return s;
}

ReductionSetup build_cm_setup(const Quiver& base, int n,
                              const std::vector<Rational>& theta,
                              const std::vector<Rational>& c_pre) {
  if (n <= 0) throw ZeroDimensionVector("rank must be positive");
  const DimensionVector delta = minimal_imaginary_root(base);
  const StabilityResult st = check_stability_cm(base, n, theta);
  if (!st.ok)
    throw StabilityViolation("stability fails at root " +
                             format_ints(*st.witness));

  const int inf = base.n_vertices;
  std::vector<std::pair<int, int>> arrows;
  for (const Arrow& a : base.arrows) arrows.emplace_back(a.out, a.in);
  arrows.emplace_back(inf, 0);
  const Quiver aug = make_quiver(base.n_vertices + 1, arrows);

  DimensionVector v(delta.size());
  for (size_t i = 0; i < delta.size(); ++i) v[i] = n * delta[i];
  v.push_back(1);

  Rational theta_delta(0), c_delta(0);
  for (size_t i = 0; i < delta.size(); ++i) {
    theta_delta += theta[i] * delta[i];
    c_delta += c_pre[i] * delta[i];
  }
  std::vector<Rational> theta_full = theta;
  theta_full.push_back(-n * theta_delta);
  std::vector<Rational> c_full = c_pre;
  c_full.push_back(-n * c_delta);

  ReductionSetup s = build_quiver_setup(aug, v, theta_full, c_full, inf);
  s.provenance = "calogero-moser";
  s.echo["cm_rank"] = std::to_string(n);
  return s;
}

}  // namespace qhr

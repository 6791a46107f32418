#include "qhr/brst_ops.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "qhr/errors.hpp"

namespace qhr {

namespace {

void add_ghost_weyl(BRSTElement& acc, const WeylElement& w,
                    const GhostElement& g) {
  if (w.is_zero()) return;
  for (const auto& [gm, c] : g.terms()) acc.add_term(gm, w * c);
}

GhostElement ghost_of(int g_dim, GhostMono m) {
  return GhostElement::monomial(g_dim, m, Rational(1));
}

std::vector<long> weyl_pure_weight(
    const WeylElement& w, const std::vector<std::vector<long>>& weights) {
  const WeightResult r = w.torus_weight(weights);
  if (r.kind == WeightResult::Mixed)
    throw NotBihomogeneous("moment component is not weight-homogeneous");
  if (r.kind == WeightResult::Zero)
    return std::vector<long>(weights.empty() ? 0 : weights.front().size(), 0);
  return r.weight;
}

// Matrix of `apply` with respect to explicit bases; every image term must
// land in the codomain.
SparseMatrix assemble_map(
    const std::function<BRSTElement(const BRSTElement&)>& apply, int n_vars,
    int g_dim, const std::vector<BasisMono>& domain,
    const std::vector<BasisMono>& codomain) {
  std::map<BasisMono, int> index;
  for (int i = 0; i < static_cast<int>(codomain.size()); ++i)
    index[codomain[i]] = i;
  SparseMatrix m(static_cast<int>(codomain.size()),
                 static_cast<int>(domain.size()));
  for (int j = 0; j < static_cast<int>(domain.size()); ++j) {
    const BasisMono& bm = domain[j];
    const BRSTElement el = BRSTElement::tensor(
        WeylElement::monomial(n_vars, bm.wm, Rational(1)),
        ghost_of(g_dim, bm.gm));
    const BRSTElement image = apply(el);
    for (const auto& [gm, w] : image.terms()) {
      for (const auto& [wm, c] : w.terms()) {
        auto it = index.find(BasisMono{wm, gm});
        if (it == index.end()) {
          std::ostringstream os;
          os << "image term " << w.to_string() << " outside codomain";
          throw ContainmentViolation(os.str());
        }
        m.add(it->second, j, c);
      }
    }
  }
  return m;
}

// Even filtration degrees 0, 2, ..., bound.
std::vector<int> even_degrees(int bound) {
  std::vector<int> ks;
  for (int k = 0; k <= bound; k += 2) ks.push_back(k);
  return ks;
}

std::vector<int> degree_prefix_counts(const std::vector<BasisMono>& basis,
                                      const std::vector<int>& ks) {
  std::vector<int> counts;
  for (int k : ks) {
    int c = 0;
    for (const auto& b : basis)
      if (b.wm.degree() <= k) ++c;
    counts.push_back(c);
  }
  return counts;
}

// dim(column span intersected with the degree <= k coordinate subspace),
// coordinates being the rows of m in basis order.
long refined_image_dim(const SparseMatrix& m,
                       const std::vector<BasisMono>& row_basis, int k,
                       int full_rank) {
  std::vector<bool> keep(row_basis.size());
  for (size_t i = 0; i < row_basis.size(); ++i)
    keep[i] = row_basis[i].wm.degree() > k;
  return full_rank - rank(m.row_subset(keep));
}

std::vector<CohomologyCell> truncated_cells(
    const SparseMatrix& m_ker, const SparseMatrix& m_im,
    const std::vector<BasisMono>& domain,
    const std::vector<BasisMono>& im_domain, int bound) {
  const std::vector<int> ks = even_degrees(bound);
  const std::vector<int> prefix = degree_prefix_counts(domain, ks);
  const std::vector<int> ker_ranks = prefix_column_ranks(m_ker, prefix);

  const int im_rank = rank(m_im);
  // Shadow computation at bound-2: same kernel, image restricted to the
  // degree <= bound-4 part of its domain.
  int shadow_cols = 0;
  for (const auto& b : im_domain)
    if (b.wm.degree() <= bound - 4) ++shadow_cols;
  const SparseMatrix m_im_shadow = m_im.column_prefix(shadow_cols);
  const int shadow_rank = rank(m_im_shadow);

  std::vector<CohomologyCell> cells;
  for (size_t t = 0; t < ks.size(); ++t) {
    const int k = ks[t];
    const long ker_dim = prefix[t] - ker_ranks[t];
    const long dim = ker_dim - refined_image_dim(m_im, domain, k, im_rank);
    CohomologyCell cell;
    cell.degree = k;
    cell.dim = dim;
    if (k <= bound - 2) {
      const long shadow_dim =
          ker_dim - refined_image_dim(m_im_shadow, domain, k, shadow_rank);
      cell.stable = (dim == shadow_dim);
    }
    cells.push_back(cell);
  }
  return cells;
}

}  // namespace

BRSTElement build_Qc(const ReductionSetup& s) {
  const int g = s.lie.dim;
  BRSTElement q(s.n_vars, g);
  for (int i = 0; i < g; ++i) {
    const WeylElement shifted =
        s.quantized_moments[i] +
        WeylElement::constant(s.n_vars, s.character.values[i]);
    add_ghost_weyl(q, shifted, GhostElement::psi_star(g, i));
  }
  const Rational half(-1, 2);  // sign chosen so that ad Q squares to zero
  for (const auto& [ijk, chi] : s.lie.structure_constants) {
    const auto [i, j, k] = ijk;
    const GhostElement ghosts = ghost_mul(
        GhostElement::psi(g, k),
        ghost_mul(GhostElement::psi_star(g, i), GhostElement::psi_star(g, j)));
    add_ghost_weyl(q, WeylElement::constant(s.n_vars, chi * half), ghosts);
  }
  return q;
}

BRSTElement apply_ad_Qc(const BRSTElement& Qc, const BRSTElement& a) {
  const BRSTElement even = a.even_part(), odd = a.odd_part();
  BRSTElement out(a.n_vars(), a.g_dim());
  if (!even.is_zero())
    out = out + brst_mul(Qc, even) - brst_mul(even, Qc);
  if (!odd.is_zero())
    out = out + brst_mul(Qc, odd) + brst_mul(odd, Qc);
  return out;
}

namespace {

// Bidegree component of ad Q_c: keeps image terms whose (|S|, |T|) differs
// from the source term by (ds, dt). ad Q_c has exactly the (0, +1) and
// (-1, 0) components; the splitting identity in the verify command checks
// that nothing else appears.
BRSTElement ad_Qc_component(const ReductionSetup& s, const BRSTElement& a,
                            int ds, int dt) {
  const BRSTElement Qc = build_Qc(s);
  BRSTElement out(a.n_vars(), s.lie.dim);
  for (const auto& [gm, w] : a.terms()) {
    BRSTElement term(a.n_vars(), s.lie.dim);
    term.add_term(gm, w);
    const BRSTElement image = apply_ad_Qc(Qc, term);
    for (const auto& [igm, iw] : image.terms()) {
      if (igm.s_count() == gm.s_count() + ds &&
          igm.t_count() == gm.t_count() + dt)
        out.add_term(igm, iw);
    }
  }
  return out;
}

}  // namespace

BRSTElement apply_d_plus(const ReductionSetup& s, const BRSTElement& a) {
  return ad_Qc_component(s, a, 0, 1);
}

BRSTElement apply_d_minus(const ReductionSetup& s, const BRSTElement& a) {
  return ad_Qc_component(s, a, -1, 0);
}

SparseMatrix assemble_differential(const ReductionSetup& s,
                                   const BRSTElement& Qc, int ghost_degree,
                                   const std::vector<long>& lambda,
                                   int domain_bound, int codomain_bound) {
  const std::vector<BasisMono> domain =
      enumerate_basis(s.n_vars, s.lie.dim, ghost_degree, lambda,
                      s.variable_weights, domain_bound);
  const std::vector<BasisMono> codomain =
      enumerate_basis(s.n_vars, s.lie.dim, ghost_degree + 1, lambda,
                      s.variable_weights, codomain_bound);
  return assemble_map(
      [&](const BRSTElement& el) { return apply_ad_Qc(Qc, el); }, s.n_vars,
      s.lie.dim, domain, codomain);
}

CohomologyReport brst_cohomology(const ReductionSetup& s, const BRSTElement& Qc,
                                 int ghost_degree,
                                 const std::vector<long>& lambda, int bound) {
  if (bound < 0 || bound % 2 != 0)
    throw DimensionMismatch("truncation bound must be even and nonnegative");
  auto basis_at = [&](int n, int b) {
    return enumerate_basis(s.n_vars, s.lie.dim, n, lambda, s.variable_weights,
                           b);
  };
  const std::vector<BasisMono> domain = basis_at(ghost_degree, bound);
  const std::vector<BasisMono> ker_codomain =
      basis_at(ghost_degree + 1, bound + 2);
  const std::vector<BasisMono> im_domain =
      basis_at(ghost_degree - 1, bound - 2);

  auto apply = [&](const BRSTElement& el) { return apply_ad_Qc(Qc, el); };
  const SparseMatrix m_ker =
      assemble_map(apply, s.n_vars, s.lie.dim, domain, ker_codomain);
  const SparseMatrix m_im =
      assemble_map(apply, s.n_vars, s.lie.dim, im_domain, domain);

  CohomologyReport rep;
  rep.ghost_degree = ghost_degree;
  rep.weight = lambda;
  rep.bound = bound;
  rep.cells = truncated_cells(m_ker, m_im, domain, im_domain, bound);
  return rep;
}

ColumnReport column_cohomology(const ReductionSetup& s, int column,
                               const std::vector<long>& lambda, int bound) {
  if (bound < 0 || bound % 2 != 0)
    throw DimensionMismatch("truncation bound must be even and nonnegative");
  const int g = s.lie.dim;
  // Position m has |S| = -m and |T| = column, so ghost degree column + m.
  auto basis_at = [&](int m, int b) {
    std::vector<BasisMono> out;
    if (m < -g || m > 0) return out;
    for (const auto& bm : enumerate_basis(s.n_vars, g, column + m, lambda,
                                          s.variable_weights, b)) {
      if (bm.gm.t_count() == column) out.push_back(bm);
    }
    return out;
  };
  auto apply = [&](const BRSTElement& el) { return apply_d_minus(s, el); };

  ColumnReport rep;
  rep.column = column;
  rep.weight = lambda;
  rep.bound = bound;
  for (int m = -g; m <= 0; ++m) {
    const std::vector<BasisMono> domain = basis_at(m, bound);
    const std::vector<BasisMono> ker_codomain = basis_at(m + 1, bound + 2);
    const std::vector<BasisMono> im_domain = basis_at(m - 1, bound - 2);
    const SparseMatrix m_ker =
        assemble_map(apply, s.n_vars, g, domain, ker_codomain);
    const SparseMatrix m_im =
        assemble_map(apply, s.n_vars, g, im_domain, domain);
    ColumnPosition pos;
    pos.position = m;
    pos.cells = truncated_cells(m_ker, m_im, domain, im_domain, bound);
    rep.positions.push_back(pos);
  }
  return rep;
}

std::vector<long> lc_oracle(const ReductionSetup& s,
                            const std::vector<long>& lambda, int bound) {
  if (bound < 0 || bound % 2 != 0)
    throw DimensionMismatch("truncation bound must be even and nonnegative");
  const std::vector<BasisMono> ambient = enumerate_basis(
      s.n_vars, 0, 0, lambda, s.variable_weights, bound);
  std::map<WeylMono, int, GradedLexLess> index;
  for (int i = 0; i < static_cast<int>(ambient.size()); ++i)
    index[ambient[i].wm] = i;

  // Rows are ambient monomials, columns are the right-ideal generators
  // m (mu_i + c_i) with deg m <= bound - 2.
  std::vector<WeylElement> generators;
  for (int i = 0; i < s.lie.dim; ++i) {
    const std::vector<long> wmu =
        weyl_pure_weight(s.quantized_moments[i], s.variable_weights);
    std::vector<long> lm(lambda.size());
    for (size_t t = 0; t < lambda.size(); ++t) lm[t] = lambda[t] - wmu[t];
    const WeylElement shifted =
        s.quantized_moments[i] +
        WeylElement::constant(s.n_vars, s.character.values[i]);
    for (const auto& bm : enumerate_basis(s.n_vars, 0, 0, lm,
                                          s.variable_weights, bound - 2)) {
      const WeylElement mono =
          WeylElement::monomial(s.n_vars, bm.wm, Rational(1));
      generators.push_back(weyl_mul(mono, shifted));
    }
  }

  SparseMatrix m(static_cast<int>(ambient.size()),
                 static_cast<int>(generators.size()));
  for (int j = 0; j < static_cast<int>(generators.size()); ++j) {
    for (const auto& [wm, c] : generators[j].terms()) {
      auto it = index.find(wm);
      if (it == index.end())
        throw ContainmentViolation("ideal generator leaves the sector");
      m.add(it->second, j, c);
    }
  }

  const int full_rank = rank(m);
  std::vector<long> dims;
  for (int k = 0; k <= bound; k += 2) {
    long amb = 0;
    std::vector<bool> keep(ambient.size());
    for (size_t i = 0; i < ambient.size(); ++i) {
      const bool low = ambient[i].wm.degree() <= k;
      if (low) ++amb;
      keep[i] = !low;
    }
    dims.push_back(amb - (full_rank - rank(m.row_subset(keep))));
  }
  return dims;
}

std::vector<long> lc_invariants_oracle(const ReductionSetup& s, int bound) {
  if (!s.lie.is_abelian())
    throw NonabelianInvariants(
        "invariant sector oracle is only available for abelian setups");
  return lc_oracle(s, std::vector<long>(s.torus_rank(), 0), bound);
}

namespace {

void multi_indices(int slots, int total, MultiIndex& cur,
                   std::vector<MultiIndex>& out) {
  if (slots == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= total; ++e) {
    cur.push_back(e);
    multi_indices(slots - 1, total - e, cur, out);
    cur.pop_back();
  }
}

std::vector<WeylMono> symbol_monomials(int n_vars, int degree) {
  std::vector<MultiIndex> flat;
  MultiIndex cur;
  if (degree >= 0) multi_indices(2 * n_vars, degree, cur, flat);
  std::vector<WeylMono> out;
  for (const auto& f : flat) {
    out.push_back(WeylMono{MultiIndex(f.begin(), f.begin() + n_vars),
                           MultiIndex(f.begin() + n_vars, f.end())});
  }
  return out;
}

}  // namespace

FlatnessReport koszul_flatness_certificate(
    const std::vector<PolyElement>& moments, int n_vars, int bound) {
  std::vector<int> gen_degrees;
  for (const auto& p : moments) {
    if (p.is_zero())
      throw NotBihomogeneous("classical moment component is zero");
    int d = -1;
    for (const auto& [wm, c] : p.terms()) {
      if (d < 0) d = wm.degree();
      if (wm.degree() != d)
        throw NotBihomogeneous("classical moment is not homogeneous");
    }
    gen_degrees.push_back(d);
  }

  std::vector<Integer> numerator{Integer(1)};
  for (int d : gen_degrees) {
    std::vector<Integer> factor(d + 1, Integer(0));
    factor[0] = 1;
    factor[d] = -1;
    numerator = poly_mul_trunc(numerator, factor, bound);
  }
  const SeriesTruncation expected =
      expand_rational_series(numerator, {{1, 2 * n_vars}}, bound);

  FlatnessReport rep;
  rep.expected = expected.coeffs;
  rep.ok = true;
  for (int k = 0; k <= bound; ++k) {
    const std::vector<WeylMono> ambient = symbol_monomials(n_vars, k);
    std::map<WeylMono, int, GradedLexLess> index;
    for (int i = 0; i < static_cast<int>(ambient.size()); ++i)
      index[ambient[i]] = i;
    std::vector<PolyElement> relations;
    for (size_t gi = 0; gi < moments.size(); ++gi) {
      for (const auto& wm : symbol_monomials(n_vars, k - gen_degrees[gi])) {
        relations.push_back(
            PolyElement::monomial(n_vars, wm, Rational(1)) * moments[gi]);
      }
    }
    SparseMatrix m(static_cast<int>(ambient.size()),
                   static_cast<int>(relations.size()));
    for (int j = 0; j < static_cast<int>(relations.size()); ++j)
      for (const auto& [wm, c] : relations[j].terms())
        m.add(index.at(wm), j, c);
    const long actual = static_cast<long>(ambient.size()) - rank(m);
    rep.actual.push_back(actual);
    if (rep.ok && Integer(actual) != expected.coeffs[k]) {
      rep.ok = false;
      rep.first_failure = k;
    }
  }
  return rep;
}

FlatnessReport koszul_flatness_certificate(const ReductionSetup& s, int bound) {
  return koszul_flatness_certificate(s.classical_moments, s.n_vars, bound);
}

LcKoszulReport dplus_on_Lc_cohomology(const ReductionSetup& s,
                                      const std::vector<long>& lambda,
                                      int bound) {
  if (!s.lie.is_abelian())
    throw NonabelianInvariants(
        "ghost-raising Koszul model requires an abelian setup");
  const int d = s.lie.dim;
  LcKoszulReport rep;
  rep.lc_dims = lc_oracle(s, lambda, bound);

  // Exterior-degree bases: bitmasks in increasing numeric order.
  std::vector<std::vector<uint32_t>> bases(d + 1);
  for (uint32_t m = 0; m < (1u << d); ++m)
    bases[__builtin_popcount(m)].push_back(m);

  // Wedge by lambda, Lambda^n -> Lambda^{n+1}.
  auto wedge = [&](int n) {
    std::map<uint32_t, int> idx;
    const int rows =
        n + 1 <= d ? static_cast<int>(bases[n + 1].size()) : 0;
    if (n + 1 <= d)
      for (int i = 0; i < rows; ++i) idx[bases[n + 1][i]] = i;
    SparseMatrix m(rows, static_cast<int>(bases[n].size()));
    for (int j = 0; j < static_cast<int>(bases[n].size()); ++j) {
      const uint32_t T = bases[n][j];
      for (int i = 0; i < d; ++i) {
        if (lambda[i] == 0 || (T & (1u << i))) continue;
        const int below = __builtin_popcount(T & ((1u << i) - 1));
        const Rational sign = (below % 2 == 0) ? Rational(1) : Rational(-1);
        m.add(idx.at(T | (1u << i)), j, sign * Rational(lambda[i]));
      }
    }
    return m;
  };

  for (int n = 0; n <= d; ++n) {
    const long ker = kernel_dimension(wedge(n));
    const long img = n == 0 ? 0 : rank(wedge(n - 1));
    const long h = ker - img;
    std::vector<long> row;
    for (long lc : rep.lc_dims) row.push_back(h * lc);
    rep.table.push_back(row);
  }
  return rep;
}

}  // namespace qhr

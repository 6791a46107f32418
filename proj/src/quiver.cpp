#include "qhr/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qhr/errors.hpp"
#include "qhr/sparse_matrix.hpp"

namespace qhr {

Quiver make_quiver(int n_vertices,
                   const std::vector<std::pair<int, int>>& arrows) {
  Quiver q;
  q.n_vertices = n_vertices;
  for (const auto& [out, in] : arrows) {
    if (out == in) throw Error("quiver must have no loops");
    if (out < 0 || out >= n_vertices || in < 0 || in >= n_vertices)
      throw Error("arrow endpoint out of range");
    q.arrows.push_back({out, in});
  }
  return q;
}

Quiver affine_a(int ell) {
  if (ell < 1) throw Error("affine A_ell requires ell >= 1");
  std::vector<std::pair<int, int>> arrows;
  if (ell == 1) {
    arrows = {{0, 1}, {0, 1}};
  } else {
    for (int i = 0; i < ell; ++i) arrows.push_back({i, i + 1});
    arrows.push_back({ell, 0});
  }
  return make_quiver(ell + 1, arrows);
}

Quiver affine_d(int ell) {
  if (ell < 4) throw Error("affine D_ell requires ell >= 4");
  // Leaves 0, 1 fork into 2; path 2..ell-2; leaves ell-1, ell fork from
  // ell-2.
  std::vector<std::pair<int, int>> arrows = {{0, 2}, {1, 2}};
  for (int i = 2; i < ell - 2; ++i) arrows.push_back({i, i + 1});
  arrows.push_back({ell - 2, ell - 1});
  arrows.push_back({ell - 2, ell});
  return make_quiver(ell + 1, arrows);
}

long tits_form(const Quiver& q, const DimensionVector& v) {
  long result = 0;
  for (int x : v) result += static_cast<long>(x) * x;
  for (const auto& a : q.arrows)
    result -= static_cast<long>(v[a.out]) * v[a.in];
  return result;
}

long p_of_v(const Quiver& q, const DimensionVector& v) {
  return 1 - tits_form(q, v);
}

namespace {

bool connected_support(const Quiver& q, const std::vector<int>& v) {
  std::vector<int> support;
  for (int i = 0; i < q.n_vertices; ++i)
    if (v[i] != 0) support.push_back(i);
  if (support.empty()) return false;
  std::vector<bool> seen(q.n_vertices, false);
  std::vector<int> stack = {support.front()};
  seen[support.front()] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows) {
      int other = -1;
      if (a.out == u) other = a.in;
      if (a.in == u) other = a.out;
      if (other >= 0 && v[other] != 0 && !seen[other]) {
        seen[other] = true;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(support.begin(), support.end(),
                     [&](int i) { return seen[i]; });
}

}  // namespace

std::vector<std::vector<int>> enumerate_bounded_roots(
    const Quiver& q, const std::vector<int>& bound) {
  std::vector<std::vector<int>> positives;
  std::vector<int> v(q.n_vertices, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == q.n_vertices) {
      if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) return;
      if (tits_form(q, v) <= 1 && connected_support(q, v))
        positives.push_back(v);
      return;
    }
    for (int e = 0; e <= bound[pos]; ++e) {
      v[pos] = e;
      rec(pos + 1);
    }
    v[pos] = 0;
  };
  rec(0);
  std::sort(positives.begin(), positives.end());
  std::vector<std::vector<int>> out = positives;
  for (const auto& r : positives) {
    std::vector<int> neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    out.push_back(std::move(neg));
  }
  return out;
}

DimensionVector minimal_imaginary_root(const Quiver& q) {
  // Radical of the symmetrized form: C_ii = 2, C_ij = -#edges{i,j}.
  const int n = q.n_vertices;
  SparseMatrix cartan(n, n);
  for (int i = 0; i < n; ++i) cartan.set(i, i, 2);
  for (const auto& a : q.arrows) {
    cartan.add(a.out, a.in, -1);
    cartan.add(a.in, a.out, -1);
  }
  const auto basis = nullspace_basis(cartan);
  if (basis.size() != 1)
    throw NotAffine("radical of the Tits form is not one-dimensional");
  // Scale to a primitive integer vector with positive entries.
  Integer lcm_den = 1;
  for (const auto& x : basis[0])
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            x.get_den().get_mpz_t());
  std::vector<Integer> ints;
  Integer gcd_num = 0;
  for (const auto& x : basis[0]) {
    Integer v = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (gcd_num == 0) throw NotAffine("zero radical generator");
  const bool negate = ints.front() < 0;
  DimensionVector delta(n);
  for (int i = 0; i < n; ++i) {
    Integer v = ints[i] / gcd_num;
    if (negate) v = -v;
    if (v <= 0)
      throw NotAffine("radical generator is not strictly positive");
    delta[i] = static_cast<int>(v.get_si());
  }
  return delta;
}

namespace {

Rational dot(const std::vector<Rational>& theta, const std::vector<int>& v) {
  Rational s = 0;
  for (size_t i = 0; i < theta.size(); ++i) s += theta[i] * v[i];
  return s;
}

}  // namespace

StabilityResult check_stability_preprojective(
    const Quiver& q, const DimensionVector& delta,
    const std::vector<Rational>& theta) {
  if (dot(theta, delta) != 0) return {false, delta};
  const std::vector<int> bound(q.n_vertices, 1);
  std::vector<int> delta_v(delta.begin(), delta.end());
  std::vector<int> neg_delta(delta_v.size());
  for (size_t i = 0; i < delta_v.size(); ++i) neg_delta[i] = -delta_v[i];
  for (const auto& alpha : enumerate_bounded_roots(q, bound)) {
    if (alpha == delta_v || alpha == neg_delta) continue;
    if (dot(theta, alpha) == 0) return {false, alpha};
  }
  return {true, std::nullopt};
}

StabilityResult check_stability_cm(const Quiver& base, int n,
                                   const std::vector<Rational>& theta) {
  const std::vector<int> bound(base.n_vertices, n);
  for (const auto& alpha : enumerate_bounded_roots(base, bound))
    if (dot(theta, alpha) == 0) return {false, alpha};
  return {true, std::nullopt};
}

std::vector<long> shift_vector(const Quiver& q, const DimensionVector& delta) {
  std::vector<long> shift(q.n_vertices, 0);
  for (int i = 0; i < q.n_vertices; ++i) shift[i] = -delta[i];
  for (const auto& a : q.arrows) shift[a.out] += delta[a.in];
  return shift;
}

long flatness_dimension_target(const Quiver& q, const DimensionVector& v) {
  long vv = 0;
  for (int x : v) vv += static_cast<long>(x) * x;
  return vv - 1 + 2 * p_of_v(q, v);
}

}  // namespace qhr

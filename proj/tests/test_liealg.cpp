#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qhr/errors.hpp"
#include "qhr/lie.hpp"

using namespace qhr;

namespace {

// Dense block-diagonal matrix realization of a gl-sum basis element.
using Mat = std::vector<std::vector<Rational>>;

Mat unit_matrix(const LieData& L, int idx, int total) {
  Mat m(total, std::vector<Rational>(total, Rational(0)));
  // Row offset of each retained block.
  int offset = 0;
  for (const auto& [vertex, size] : L.block_structure) {
    if (vertex == L.units[idx].vertex) {
      m[offset + L.units[idx].p - 1][offset + L.units[idx].q - 1] = 1;
      return m;
    }
    offset += size;
  }
  REQUIRE(false);
  return m;
}

Mat commutator(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat c(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return c;
}

}  // namespace

TEST_CASE("torus lie data is abelian") {
  const LieData t = torus_lie(3);
  CHECK(t.dim == 3);
  CHECK(t.is_abelian());
  CHECK(!jacobi_check(t).has_value());
}

TEST_CASE("gl sum structure constants match matrix commutators") {
  // Blocks of sizes 1, 2, 3 with the size-1 block removed.
  const LieData L = gl_sum_lie({1, 2, 3}, 0);
  CHECK(L.dim == 4 + 9);
  int total = 0;
  for (const auto& [vertex, size] : L.block_structure) total += size;
  for (int i = 0; i < L.dim; ++i) {
    for (int j = 0; j < L.dim; ++j) {
      Mat expect = commutator(unit_matrix(L, i, total),
                              unit_matrix(L, j, total));
      Mat got(total, std::vector<Rational>(total, Rational(0)));
      for (int k = 0; k < L.dim; ++k) {
        const Rational chi = L.chi(i, j, k);
        if (chi == 0) continue;
        const Mat mk = unit_matrix(L, k, total);
        for (int r = 0; r < total; ++r)
          for (int c = 0; c < total; ++c) got[r][c] += chi * mk[r][c];
      }
      CHECK(got == expect);
    }
  }
  CHECK(!jacobi_check(L).has_value());
}

TEST_CASE("distinguished block must have size one") {
  CHECK_THROWS_AS(gl_sum_lie({2, 2}, 0), NoUnitBlock);
}

TEST_CASE("character validation") {
  const LieData L = gl_sum_lie({1, 2}, 0);
  // Trace character: constant on the block diagonal.
  Character good;
  for (const auto& u : L.units)
    good.values.push_back(u.p == u.q ? Rational(1, 3) : Rational(0));
  CHECK(validate_character(L, good));

  Character bad;
  for (const auto& u : L.units)
    bad.values.push_back(Rational(u.p));  // varies along the diagonal
  std::string reason;
  CHECK(!validate_character(L, bad, &reason));
  CHECK(!reason.empty());

  Character off;
  for (const auto& u : L.units)
    off.values.push_back(Rational(1));  // nonzero off the diagonal
  CHECK(!validate_character(L, off));

  const LieData t = torus_lie(2);
  Character any{{Rational(5), Rational(-7, 3)}};
  CHECK(validate_character(t, any));
}

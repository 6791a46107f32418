#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhr/errors.hpp"
#include "qhr/rational.hpp"
#include "qhr/series.hpp"
#include "qhr/sparse_matrix.hpp"

using namespace qhr;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(format_rational(Rational(-3, 4)) == "-3/4");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("sparse rank and kernel") {
  SparseMatrix m(3, 3);
  m.set(0, 0, Rational(1));
  m.set(0, 1, Rational(2));
  m.set(1, 0, Rational(2));
  m.set(1, 1, Rational(4));
  m.set(2, 2, Rational(1));
  CHECK(rank(m) == 2);
  CHECK(kernel_dimension(m) == 1);
  CHECK(rank(m.transpose()) == 2);

  SparseMatrix z(4, 5);
  CHECK(rank(z) == 0);
  CHECK(kernel_dimension(z) == 5);
}

TEST_CASE("rank is exact, no float drift") {
  // Hilbert-like matrix: entries 1/(r+c+1); full rank despite tiny pivots.
  SparseMatrix m(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m.set(r, c, Rational(1, r + c + 1));
  CHECK(rank(m) == 6);
}

TEST_CASE("quotient dimension and containment") {
  SparseMatrix num(2, 3);
  num.set(0, 0, Rational(1));
  num.set(1, 1, Rational(1));
  SparseMatrix den(1, 3);
  den.set(0, 0, Rational(5));
  CHECK(quotient_dimension(3, num, den) == 1);
  SparseMatrix bad(1, 3);
  bad.set(0, 2, Rational(1));
  CHECK_THROWS_AS(quotient_dimension(3, num, bad), ContainmentViolation);
}

TEST_CASE("prefix column ranks match per-prefix recomputation") {
  SparseMatrix m(4, 6);
  int v = 1;
  for (int c = 0; c < 6; ++c)
    for (int r = 0; r < 4; ++r) m.set(r, c, Rational((v++ * 7) % 11 - 5));
  m.set(0, 3, Rational(0));
  std::vector<int> prefixes{0, 2, 4, 6};
  const std::vector<int> got = prefix_column_ranks(m, prefixes);
  for (size_t i = 0; i < prefixes.size(); ++i)
    CHECK(got[i] == rank(m.column_prefix(prefixes[i])));
}

TEST_CASE("nullspace basis") {
  SparseMatrix m(1, 3);
  m.set(0, 0, Rational(1));
  m.set(0, 1, Rational(1));
  m.set(0, 2, Rational(-2));
  const auto basis = nullspace_basis(m);
  CHECK(basis.size() == 2);
  for (const auto& v : basis)
    CHECK(v[0] + v[1] - 2 * v[2] == 0);
}

TEST_CASE("series expansion of complete intersection type") {
  // (1 - t^2) / (1 - t)^4 has coefficients (k+1)^2.
  const SeriesTruncation s =
      expand_rational_series({Integer(1), Integer(0), Integer(-1)},
                             {{1, 4}}, 8);
  REQUIRE(s.coeffs.size() == 9);
  for (int k = 0; k <= 8; ++k)
    CHECK(s.coeffs[k] == Integer((k + 1) * (k + 1)));
}

TEST_CASE("series with higher degree denominator factor") {
  // 1 / ((1-t)(1-t^2)) counts partitions into parts 1 and 2.
  const SeriesTruncation s =
      expand_rational_series({Integer(1)}, {{1, 1}, {2, 1}}, 6);
  const std::vector<long> expect{1, 1, 2, 2, 3, 3, 4};
  for (int k = 0; k <= 6; ++k) CHECK(s.coeffs[k] == Integer(expect[k]));
}

TEST_CASE("poly_mul_trunc truncates") {
  const std::vector<Integer> a{Integer(1), Integer(1)};
  const auto p = poly_mul_trunc(a, a, 1);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhr/errors.hpp"
#include "qhr/quiver.hpp"
#include "qhr/setup.hpp"

using namespace qhr;

TEST_CASE("affine presets and minimal imaginary roots") {
  const Quiver a3 = affine_a(3);
  CHECK(a3.n_vertices == 4);
  CHECK(a3.arrows.size() == 4);
  CHECK(minimal_imaginary_root(a3) == DimensionVector{1, 1, 1, 1});

  const Quiver a1 = affine_a(1);
  CHECK(a1.arrows.size() == 2);  // double edge
  CHECK(minimal_imaginary_root(a1) == DimensionVector{1, 1});

  const Quiver d4 = affine_d(4);
  CHECK(d4.n_vertices == 5);
  CHECK(minimal_imaginary_root(d4) == DimensionVector{1, 1, 2, 1, 1});

  // Finite type has no radical.
  CHECK_THROWS_AS(minimal_imaginary_root(make_quiver(2, {{0, 1}})),
                  NotAffine);
}

TEST_CASE("tits form and p(v)") {
  const Quiver a1 = affine_a(1);
  CHECK(tits_form(a1, {1, 1}) == 0);
  CHECK(p_of_v(a1, {1, 1}) == 1);
  CHECK(tits_form(a1, {1, 0}) == 1);
  const Quiver d4 = affine_d(4);
  CHECK(tits_form(d4, {1, 1, 2, 1, 1}) == 0);
  CHECK(flatness_dimension_target(d4, {1, 1, 2, 1, 1}) == 9);
}

TEST_CASE("loops are rejected") {
  CHECK_THROWS(make_quiver(2, {{0, 0}}));
}

TEST_CASE("preprojective stability") {
  const Quiver a1 = affine_a(1);
  CHECK(check_stability_preprojective(a1, {1, 1},
                                      {Rational(1), Rational(-1)})
            .ok);
  // theta.delta != 0 fails.
  CHECK(!check_stability_preprojective(a1, {1, 1},
                                       {Rational(1), Rational(0)})
             .ok);
  // theta orthogonal to a real root fails with a witness.
  const Quiver a2 = affine_a(2);
  const StabilityResult bad = check_stability_preprojective(
      a2, {1, 1, 1}, {Rational(1), Rational(-1), Rational(0)});
  CHECK(!bad.ok);
  CHECK(bad.witness.has_value());
}

TEST_CASE("calogero-moser stability") {
  const Quiver a1 = affine_a(1);
  CHECK(check_stability_cm(a1, 1, {Rational(1), Rational(3)}).ok);
  CHECK(!check_stability_cm(a1, 1, {Rational(1), Rational(-1)}).ok);
}

TEST_CASE("shift vector") {
  const Quiver a2 = affine_a(2);
  const auto sh = shift_vector(a2, {1, 1, 1});
  CHECK(sh == std::vector<long>{0, 0, 0});
}

TEST_CASE("hypertoric construction guards") {
  HypertoricData ok{{{1, 0, 1}, {0, 1, 1}},
                    {Rational(1), Rational(2)},
                    {Rational(1, 3), Rational(2, 7)}};
  const ReductionSetup s = build_hypertoric_setup(ok);
  CHECK(s.n_vars == 3);
  CHECK(s.lie.dim == 2);
  CHECK(s.variable_weights[2] == std::vector<long>{1, 1});

  HypertoricData not_uni{{{2}}, {Rational(1)}, {Rational(0)}};
  CHECK_THROWS_AS(build_hypertoric_setup(not_uni), NotUnimodular);

  HypertoricData rank_def{{{1, 1}, {1, 1}},
                          {Rational(1), Rational(1)},
                          {Rational(0), Rational(0)}};
  CHECK_THROWS_AS(build_hypertoric_setup(rank_def), RankDeficient);
}

TEST_CASE("hypertoric smoothness criterion") {
  HypertoricData h{{{1, 1}}, {Rational(1)}, {Rational(0)}};
  CHECK(check_hypertoric_smoothness(h).ok);
  HypertoricData degenerate{{{1}}, {Rational(0)}, {Rational(0)}};
  const SmoothnessResult r = check_hypertoric_smoothness(degenerate);
  CHECK(!r.ok);
  CHECK(r.witness->empty());  // the empty column set already spans theta
}

TEST_CASE("quiver setup equivariance weights") {
  // One arrow 0 -> 1 with a rank-2 block at the head.
  const Quiver q = make_quiver(2, {{0, 1}});
  const ReductionSetup s = build_quiver_setup(
      q, {1, 2}, {Rational(2), Rational(-1)}, {Rational(2), Rational(-1)},
      0);
  CHECK(s.n_vars == 2);
  CHECK(s.lie.dim == 4);
  // Each moment component is weight-homogeneous of weight eps_p - eps_q.
  for (int b = 0; b < s.lie.dim; ++b) {
    const WeightResult w =
        s.quantized_moments[b].torus_weight(s.variable_weights);
    CHECK(w.kind != WeightResult::Mixed);
  }
  // Center must be killed by the character.
  CHECK_THROWS_AS(
      build_quiver_setup(q, {1, 2}, {Rational(0), Rational(0)},
                         {Rational(1), Rational(1)}, 0),
      ValidationFailure);
  CHECK_THROWS_AS(
      build_quiver_setup(q, {1, 0}, {Rational(0), Rational(0)},
                         {Rational(0), Rational(0)}, 0),
      ZeroDimensionVector);
}

TEST_CASE("preprojective setup") {
  const ReductionSetup s = build_preprojective_setup(
      affine_a(1), {Rational(1), Rational(-1)},
      {Rational(1, 3), Rational(-1, 3)});
  CHECK(s.provenance == "preprojective");
  CHECK(s.n_vars == 2);
  CHECK(s.lie.dim == 1);
  CHECK(s.flatness_target == 3);
  CHECK_THROWS_AS(
      build_preprojective_setup(affine_a(1), {Rational(1), Rational(0)},
                                {Rational(0), Rational(0)}),
      StabilityViolation);
}

TEST_CASE("calogero-moser setup augments the quiver") {
  const ReductionSetup s =
      build_cm_setup(affine_a(1), 1, {Rational(1), Rational(3)},
                     {Rational(1, 3), Rational(2, 3)});
  CHECK(s.provenance == "calogero-moser");
  CHECK(s.n_vars == 3);  // two cycle arrows plus the framing arrow
  CHECK(s.lie.dim == 2);
  // The retained blocks are the two base vertices; the framing block is
  // the deleted one, so its character value -1 does not appear here.
  Rational cv(0);
  for (int i = 0; i < s.lie.dim; ++i) cv += s.character.values[i];
  CHECK(cv == Rational(1));
}

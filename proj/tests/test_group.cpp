#include <catch2/catch_amalgamated.hpp>

#include <metrext/group.hpp>
#include <metrext/operators.hpp>

#include "fixtures.hpp"

using namespace metrext;

TEST_CASE("rotation group of the square validates cleanly") {
  const Instance inst = make_square5();
  REQUIRE(inst.group);
  REQUIRE(inst.group->size() == 4);
  REQUIRE(inst.group->degree() == 5);
  REQUIRE(inst.warnings.empty());
  REQUIRE(inst.group->apply(1, 0) == 1);
  REQUIRE(inst.group->apply(1, 4) == 4);  // center is fixed
  REQUIRE(inst.group->apply(3, 3) == 2);
}

TEST_CASE("group validation rejects structural defects") {
  const Instance inst = make_square5();
  const auto& sp = inst.space;
  const auto& sub = inst.subset;

  REQUIRE_THROWS_AS(validate_group({}, sp, sub), std::invalid_argument);
  // wrong length
  REQUIRE_THROWS_AS(validate_group({{0, 1, 2, 3}}, sp, sub), std::invalid_argument);
  // not a bijection
  REQUIRE_THROWS_AS(validate_group({{0, 1, 2, 3, 3}}, sp, sub), std::invalid_argument);
  // missing identity
  REQUIRE_THROWS_AS(validate_group({{1, 2, 3, 0, 4}}, sp, sub), std::invalid_argument);
  // not closed: identity plus a single rotation without its powers
  REQUIRE_THROWS_WITH(validate_group({{0, 1, 2, 3, 4}, {1, 2, 3, 0, 4}}, sp, sub),
                      Catch::Matchers::ContainsSubstring("not closed"));

  // swapping a subset point with the center moves X off itself
  REQUIRE_THROWS_WITH(validate_group({{0, 1, 2, 3, 4}, {4, 1, 2, 3, 0}}, sp, sub),
                      Catch::Matchers::ContainsSubstring("subset"));
}

TEST_CASE("non-isometric actions validate with a warning") {
  // three collinear points, X = {0,1}; the swap 0<->1 is no isometry
  // (d(0,2) = 2 but d(1,2) = 1) yet is a perfectly good action fixing X
  const FiniteMetricSpace sp = FiniteMetricSpace::from_coords({{0.0}, {1.0}, {2.0}});
  const SubsetSpec sub({0, 1}, 0, 1, 3);
  const GroupValidation gv = validate_group({{0, 1, 2}, {1, 0, 2}}, sp, sub);
  REQUIRE(gv.warnings.size() == 1);
  REQUIRE_THAT(gv.warnings[0], Catch::Matchers::ContainsSubstring("isometry"));
}

TEST_CASE("orbit averaging on the square") {
  const Instance inst = make_square5();
  PairFunction f(PairDomain::OverY, 5);
  f.at(0, 1) = 1.0;  // indicator of one adjacent pair
  const PairFunction af = average_pairs(f, *inst.group);
  REQUIRE(af.at(0, 1) == 0.25);
  REQUIRE(af.at(1, 2) == 0.25);
  REQUIRE(af.at(2, 3) == 0.25);
  REQUIRE(af.at(3, 0) == 0.25);
  REQUIRE(af.at(0, 2) == 0.0);
  REQUIRE(af.at(1, 0) == 0.0);  // the orbit of an ordered pair keeps its order
  REQUIRE(af.at(0, 4) == 0.0);

  // averaging is idempotent and its output is invariant
  const PairFunction aaf = average_pairs(af, *inst.group);
  for (int y = 0; y < 5; ++y)
    for (int yp = 0; yp < 5; ++yp) REQUIRE(aaf.at(y, yp) == af.at(y, yp));

  const PairFunction wrong(PairDomain::OverX, 5);
  REQUIRE_THROWS_AS(average_pairs(wrong, *inst.group), std::invalid_argument);
}

TEST_CASE("invariance witness and projection") {
  const Instance inst = make_square5();
  const PairFunction p = square5_p();
  REQUIRE_FALSE(invariance_witness(p, *inst.group, inst.subset, kExactTol));

  PairFunction skew = p;
  skew.at(0, 1) = 0.9;  // break one adjacency
  const auto w = invariance_witness(skew, *inst.group, inst.subset, kExactTol);
  REQUIRE(w);

  const PairFunction fixed = invariantize(skew, *inst.group, inst.subset);
  REQUIRE_FALSE(invariance_witness(fixed, *inst.group, inst.subset, kExactTol));
  // each adjacent ordered pair now carries the orbit mean of {0.9, 0.5, 0.5, 0.5}
  REQUIRE(fixed.at(0, 1) == Catch::Approx(0.6).margin(1e-12));
  REQUIRE(fixed.at(1, 2) == fixed.at(0, 1));
}

TEST_CASE("invariant extension on the square") {
  const Instance inst = make_square5();
  const Extender ext(inst.space, inst.subset);
  const PairFunction p = square5_p();
  REQUIRE(ext.stabilization_index() == 2);

  // plain series values at the center depend on the corner
  const ExtensionResult t = ext.extend_T(p, DiagVariant::BaseDiagonal);
  REQUIRE(t.output.at(0, 4) == 0.1875);
  REQUIRE(t.output.at(1, 4) == 0.3125);
  REQUIRE(t.output.at(2, 4) == 0.8125);
  REQUIRE(t.output.at(3, 4) == 0.6875);

  // averaging smooths them to a single value while fixing X pointwise
  const ExtensionResult iv = extend_invariant(ext, p, *inst.group, DiagVariant::BaseDiagonal);
  REQUIRE(iv.operator_name == "I");
  REQUIRE(iv.stabilization_level == 2);
  for (int j = 0; j < 4; ++j) {
    REQUIRE(iv.output.at(j, 4) == 0.5);
    REQUIRE(iv.output.at(4, j) == 0.5);
  }
  REQUIRE(iv.output.at(4, 4) == 0.0);
  REQUIRE(iv.output.at(0, 2) == 1.0);
  REQUIRE(iv.output.at(0, 1) == 0.5);

  // invariance of the output under every rotation
  for (int g = 0; g < 4; ++g)
    for (int y = 0; y < 5; ++y)
      for (int yp = 0; yp < 5; ++yp)
        REQUIRE(iv.output.at(inst.group->apply(g, y), inst.group->apply(g, yp)) ==
                Catch::Approx(iv.output.at(y, yp)).margin(1e-12));

  // a non-invariant input is refused with a witness in the message
  PairFunction skew = p;
  skew.at(0, 1) = 0.9;
  REQUIRE_THROWS_WITH(extend_invariant(ext, skew, *inst.group, DiagVariant::BaseDiagonal),
                      Catch::Matchers::ContainsSubstring("invariant"));
}

TEST_CASE("degree mismatches are rejected") {
  const Instance sq = make_square5();
  const Instance line = make_line4();
  const Extender ext(line.space, line.subset);
  REQUIRE_THROWS_AS(
      extend_invariant(ext, line4_p(), *sq.group, DiagVariant::BaseDiagonal),
      std::invalid_argument);
}

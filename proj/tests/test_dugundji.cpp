#include <catch2/catch_amalgamated.hpp>

#include <metrext/gen.hpp>
#include <metrext/inner_cover.hpp>

#include "fixtures.hpp"

using namespace metrext;

TEST_CASE("inner cover of the line instance") {
  const Instance inst = make_line4();
  const InnerCover inner = build_inner_cover(inst.space, inst.subset);

  // one ball per outside point, radius a quarter of its distance to X
  REQUIRE(inner.cover.elements.size() == 2);
  REQUIRE(inner.cover.elements[0].center == 2);
  REQUIRE(inner.cover.elements[1].center == 3);
  REQUIRE(inner.cover.elements[0].radius == Catch::Approx(0.1).margin(1e-12));
  REQUIRE(inner.cover.elements[1].radius == Catch::Approx(0.1).margin(1e-12));
  // balls of radius 0.1 around points 0.2 apart hold only their centers
  REQUIRE(inner.cover.elements[0].members == std::vector<int>{2});
  REQUIRE(inner.cover.elements[1].members == std::vector<int>{3});
  REQUIRE(inner.alpha == std::vector<int>{0, 1});

  const auto& w2 = inner.cover.weights_for(2);
  REQUIRE(w2.size() == 1);
  REQUIRE(w2[0].element == 0);
  REQUIRE(w2[0].weight == 1.0);

  REQUIRE_THROWS_AS(inner.cover.weights_for(0), std::invalid_argument);  // 0 is in X
}

TEST_CASE("u-map collects nearby element images") {
  const Instance inst = make_line4();
  const InnerCover inner = build_inner_cover(inst.space, inst.subset);
  REQUIRE(map_u(inst.space, inst.subset, inner, 0) == std::vector<int>{0});
  REQUIRE(map_u(inst.space, inst.subset, inner, 1) == std::vector<int>{1});
  REQUIRE(map_u(inst.space, inst.subset, inner, 2) == std::vector<int>{0});
  REQUIRE(map_u(inst.space, inst.subset, inner, 3) == std::vector<int>{1});
}

TEST_CASE("h-map on the line instance") {
  const Instance inst = make_line4();
  const InnerCover inner = build_inner_cover(inst.space, inst.subset);
  REQUIRE(map_h(inst.space, inst.subset, inner, 0) ==
          StepFunction::constant(Label::x_point(0)));
  REQUIRE(map_h(inst.space, inst.subset, inner, 2) ==
          StepFunction::constant(Label::x_point(0)));
  REQUIRE(map_h(inst.space, inst.subset, inner, 3) ==
          StepFunction::constant(Label::x_point(1)));
}

TEST_CASE("alpha breaks ties toward the lowest subset id") {
  const FiniteMetricSpace sp = FiniteMetricSpace::from_coords({{0.0}, {1.0}, {0.5}});
  const SubsetSpec sub({0, 1}, 0, 1, 3);
  const InnerCover inner = build_inner_cover(sp, sub);
  REQUIRE(inner.cover.elements.size() == 1);
  REQUIRE(inner.alpha == std::vector<int>{0});
}

TEST_CASE("hat weights are a partition of unity over each covered point") {
  Rng rng(2024);
  for (int t = 0; t < 30; ++t) {
    const int n = 4 + t % 10;
    const int k = 2 + t % (n - 2);
    const Instance inst = t % 2 ? random_matrix_instance(rng, n, k)
                                : random_point_instance(rng, n, k, 2);
    const InnerCover inner = build_inner_cover(inst.space, inst.subset);
    for (int y = 0; y < n; ++y) {
      if (inst.subset.contains(y)) continue;
      double total = 0.0;
      for (const PointWeight& pw : inner.cover.weights_for(y)) {
        REQUIRE(pw.weight > 0.0);
        total += pw.weight;
      }
      REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
    }
  }
}

TEST_CASE("u-map targets stay within twice the distance to the subset") {
  Rng rng(515);
  for (int t = 0; t < 30; ++t) {
    const int n = 4 + t % 10;
    const int k = 2 + t % (n - 2);
    const Instance inst = t % 2 ? random_matrix_instance(rng, n, k)
                                : random_point_instance(rng, n, k, 3);
    const InnerCover inner = build_inner_cover(inst.space, inst.subset);
    for (int y = 0; y < n; ++y) {
      if (inst.subset.contains(y)) continue;
      const double dy = dist_to_subset(inst.space, inst.subset, y);
      const auto u = map_u(inst.space, inst.subset, inner, y);
      REQUIRE_FALSE(u.empty());
      REQUIRE(std::is_sorted(u.begin(), u.end()));
      for (int x : u) {
        REQUIRE(inst.subset.contains(x));
        REQUIRE(inst.space.dist(y, x) < 2.0 * dy);
      }
      // the step function h(y) only spends time on u(y)
      const StepFunction h = map_h(inst.space, inst.subset, inner, y);
      for (const Label& l : h.support()) {
        REQUIRE(l.is_x_point());
        REQUIRE(std::binary_search(u.begin(), u.end(), l.point));
      }
    }
  }
}

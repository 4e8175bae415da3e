// Extends a metric from two subset points to a four-point space, then prints
// the extended matrix and the property-suite verdicts.
#include <cstdio>

#include <metrext/metrext.hpp>

using namespace metrext;

int main() {
  // four points on a line, the subset is the two endpoints
  FiniteMetricSpace space = FiniteMetricSpace::from_coords({{0.0}, {1.0}, {0.4}, {0.6}});
  SubsetSpec subset({0, 1}, 0, 1, space.size());

  // the only metric on two points, up to scale
  PairFunction p(PairDomain::OverX, 2);
  p.at(0, 1) = p.at(1, 0) = 1.0;

  Extender ext(space, subset);
  const ExtensionResult res = ext.extend_T(p, DiagVariant::BaseDiagonal);

  std::printf("series stabilizes at level %d\n", res.stabilization_level);
  std::printf("extended matrix:\n");
  for (int y = 0; y < space.size(); ++y) {
    for (int yp = 0; yp < space.size(); ++yp)
      std::printf("  %8.5f", res.output.at(y, yp));
    std::printf("\n");
  }

  // the same value through the direct operator, for contrast
  const ExtensionResult s1 = ext.extend_S_family(p, Operator::S1);
  std::printf("series vs direct at the outside pair: %.5f vs %.5f\n",
              res.output.at(2, 3), s1.output.at(2, 3));

  Instance inst{std::move(space), std::move(subset), std::nullopt, std::nullopt, {}};
  const auto reports = run_invariant_suite(inst, Operator::T, DiagVariant::BaseDiagonal,
                                           /*seed=*/0, /*trials=*/10);
  std::printf("\nproperty suite:\n%s", format_report_table(reports).c_str());
  return all_required_pass(reports) ? 0 : 1;
}

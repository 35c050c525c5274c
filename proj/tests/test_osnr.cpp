#include <gtest/gtest.h>

#include <cmath>

#include "hueon/errors.hpp"
#include "hueon/osnr.hpp"
#include "test_support.hpp"

using namespace hueon;

namespace {

Link make_link(double km) {
  Link l;
  l.distance_km = km;
  return l;
}

}  // namespace

// Reference values from an independent 30-digit evaluation of
// NF * h * nu * G * Rs / P per span with the default parameters.
TEST(DefaultModel, SingleSpanReciprocals) {
  const PhyParams p;
  EXPECT_NEAR(default_link_osnr(make_link(80), FiberKind::Ssmf, p), 0.0025873934684924295, 1e-15);
  EXPECT_NEAR(default_link_osnr(make_link(80), FiberKind::Ull, p), 0.0013831283319925641, 1e-15);
  EXPECT_NEAR(linear_to_db(1.0 / default_link_osnr(make_link(80), FiberKind::Ssmf, p)), 25.871375225005665, 1e-9);
  EXPECT_NEAR(linear_to_db(1.0 / default_link_osnr(make_link(80), FiberKind::Ull, p)), 28.591375225005665, 1e-9);
}

TEST(DefaultModel, MultiSpanLinks) {
  const PhyParams p;
  // 100 km: two 50 km spans; 820 km: eleven 74.5 km spans
  EXPECT_NEAR(default_link_osnr(make_link(100), FiberKind::Ssmf, p), 0.0012998477092965288, 1e-15);
  EXPECT_NEAR(default_link_osnr(make_link(100), FiberKind::Ull, p), 0.00087880490685764894, 1e-15);
  EXPECT_NEAR(default_link_osnr(make_link(820), FiberKind::Ssmf, p), 0.022139318776202902, 1e-14);
  EXPECT_NEAR(default_link_osnr(make_link(820), FiberKind::Ull, p), 0.012351215753106768, 1e-14);
  EXPECT_EQ(span_count(80, 80), 1u);
  EXPECT_EQ(span_count(80.5, 80), 2u);
}

TEST(DefaultModel, UllNeverWorseThanSsmf) {
  const PhyParams p;
  for (double km = 5; km < 3000; km += 37) {
    EXPECT_LT(default_link_osnr(make_link(km), FiberKind::Ull, p), default_link_osnr(make_link(km), FiberKind::Ssmf, p));
  }
}

TEST(DefaultModel, RejectsBadParams) {
  PhyParams p;
  p.noise_figure_db = 0;
  EXPECT_THROW(p.validate(), InvalidParams);
  p = {};
  p.max_span_km = -1;
  EXPECT_THROW(default_link_osnr(make_link(10), FiberKind::Ssmf, p), InvalidParams);
}

TEST(LinkOsnrTable, EnforcesUllNotWorse) {
  LinkOsnrTable t(1);
  t.set(0, FiberKind::Ssmf, 0.02);
  EXPECT_THROW(t.set(0, FiberKind::Ull, 0.03), InvalidParams);
  t.set(0, FiberKind::Ull, 0.01);
  EXPECT_DOUBLE_EQ(t.ull_gain(0), 2.0);
  EXPECT_THROW(t.set(0, FiberKind::Ssmf, -1.0), InvalidParams);
  EXPECT_THROW(t.reciprocal(3, FiberKind::Ssmf), MissingEntry);
}

TEST(OsnrProvider, ReciprocalsAdd) {
  const auto topo = hueon::testing::line_topology(3);
  OsnrProvider p(hueon::testing::uniform_table(topo, 0.02, 0.01));
  const std::vector<NodeId> route{0, 1, 2};
  const std::vector<LinkId> links{0, 1};
  const std::vector<FiberKind> ss{FiberKind::Ssmf, FiberKind::Ssmf};
  const std::vector<FiberKind> su{FiberKind::Ssmf, FiberKind::Ull};
  EXPECT_DOUBLE_EQ(p.path_osnr_linear(route, links, ss), 25.0);
  EXPECT_NEAR(p.path_osnr_linear(route, links, su), 1.0 / 0.03, 1e-12);
  EXPECT_NEAR(path_osnr(topo, route, ss, p), linear_to_db(25.0), 1e-12);
}

TEST(OsnrProvider, PathLookupIsDirectionAgnostic) {
  const auto f = hueon::testing::Ring4::load();
  OsnrProvider p(f.path_osnr);
  const std::vector<NodeId> bcd{f.node("B"), f.node("C"), f.node("D")};
  const std::vector<NodeId> dcb{f.node("D"), f.node("C"), f.node("B")};
  const std::vector<FiberKind> su{FiberKind::Ssmf, FiberKind::Ull};
  const std::vector<FiberKind> us{FiberKind::Ull, FiberKind::Ssmf};
  EXPECT_NEAR(path_osnr(f.topology, bcd, su, p), 14.0, 1e-12);
  EXPECT_NEAR(path_osnr(f.topology, dcb, us, p), 14.0, 1e-12);
  // the reverse mixed scheme is not in the table
  EXPECT_THROW(path_osnr(f.topology, bcd, us, p), MissingEntry);
  const auto links = f.topology.route_links(bcd);
  EXPECT_EQ(p.try_path_osnr_linear(bcd, links, us), std::nullopt);
}

TEST(OsnrProvider, Ring4LinearTableMatchesPathFormats) {
  // The per-link table must put every Fig. 1 path in the same format as the
  // literal dB values.
  const auto f = hueon::testing::Ring4::load();
  const auto table = ModulationTable::standard();
  OsnrProvider lin(f.linear);
  OsnrProvider lit(f.path_osnr);
  const auto S = FiberKind::Ssmf;
  const auto U = FiberKind::Ull;
  struct Case {
    std::vector<const char*> route;
    std::vector<FiberKind> fibers;
  };
  const std::vector<Case> cases{{{"A", "B"}, {S}}, {{"A", "B"}, {U}},       {{"B", "C", "D"}, {S, S}},
                                {{"B", "C", "D"}, {U, U}}, {{"B", "C", "D"}, {S, U}}, {{"C", "D"}, {S}},
                                {{"C", "D"}, {U}}};
  for (const auto& c : cases) {
    std::vector<NodeId> route;
    for (const char* n : c.route) route.push_back(f.node(n));
    const auto links = f.topology.route_links(route);
    EXPECT_EQ(best_format_linear(lin.path_osnr_linear(route, links, c.fibers), table),
              best_format_linear(lit.path_osnr_linear(route, links, c.fibers), table));
  }
}

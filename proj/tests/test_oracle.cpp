#include <gtest/gtest.h>

#include "hueon/errors.hpp"
#include "hueon/oracle.hpp"
#include "hueon/validator.hpp"
#include "test_support.hpp"

using namespace hueon;
using hueon::testing::Ring4;

TEST(SimpleRoutes, RingHasTwoRoutesPerPair) {
  const auto fig = Ring4::load();
  const auto r = simple_routes(fig.topology, fig.node("B"), fig.node("D"));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], (std::vector<NodeId>{1, 0, 3}));
  EXPECT_EQ(r[1], (std::vector<NodeId>{1, 2, 3}));
}

TEST(Oracle, Ring4OptimaPerFiberMask) {
  const auto fig = Ring4::load();
  const auto table = ModulationTable::standard();
  for (const OsnrProvider& osnr : {OsnrProvider(fig.path_osnr), OsnrProvider(fig.linear)}) {
    const auto ssmf = brute_force_opt(fig.topology, fig.demands, table, osnr, FiberMask::ssmf_only());
    const auto ull = brute_force_opt(fig.topology, fig.demands, table, osnr, FiberMask::ull_only());
    const auto both = brute_force_opt(fig.topology, fig.demands, table, osnr);
    EXPECT_EQ(ssmf.optimum, 11u);
    EXPECT_EQ(ull.optimum, 6u);
    EXPECT_EQ(both.optimum, 4u);
    for (const auto* r : {&ssmf, &ull, &both}) {
      ASSERT_TRUE(r->feasible);
      ASSERT_EQ(r->witness.size(), 3u);
      EXPECT_TRUE(check_assignments(fig.topology, r->witness, table, &osnr, fig.demands).empty());
      std::size_t end = 0;
      for (const auto& a : r->witness) end = std::max(end, a.end_slot());
      EXPECT_EQ(end, r->optimum);
    }
  }
}

TEST(Oracle, SingleLinkQpsk) {
  const auto t = hueon::testing::line_topology(2);
  // 13 dB on both fibers: QPSK only
  const OsnrProvider osnr(hueon::testing::uniform_table(t, 0.05, 0.05));
  const std::vector<Demand> d{{0, 0, 1, 160}};
  const auto r = brute_force_opt(t, d, ModulationTable::standard(), osnr);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.optimum, 4u);
  EXPECT_EQ(r.witness[0].format.name, "QPSK");
}

TEST(Oracle, InfeasibleAndEmpty) {
  const auto t = hueon::testing::line_topology(2, 100, 4);
  const OsnrProvider osnr(hueon::testing::uniform_table(t, 0.05, 0.05));
  const std::vector<Demand> too_big{{0, 0, 1, 300}};  // QPSK needs 6 > 4 slots
  EXPECT_FALSE(brute_force_opt(t, too_big, ModulationTable::standard(), osnr).feasible);
  const auto empty = brute_force_opt(t, std::span<const Demand>{}, ModulationTable::standard(), osnr);
  EXPECT_TRUE(empty.feasible);
  EXPECT_EQ(empty.optimum, 0u);
}

TEST(Oracle, GuardsInstanceSize) {
  const auto big = hueon::testing::line_topology(6);
  const OsnrProvider osnr(hueon::testing::uniform_table(big, 0.05, 0.05));
  const std::vector<Demand> d{{0, 0, 1, 10}};
  EXPECT_THROW(brute_force_opt(big, d, ModulationTable::standard(), osnr), InstanceTooLarge);
  const auto wide = hueon::testing::line_topology(2, 100, 32);
  const OsnrProvider o2(hueon::testing::uniform_table(wide, 0.05, 0.05));
  EXPECT_THROW(brute_force_opt(wide, d, ModulationTable::standard(), o2), InstanceTooLarge);
  const std::vector<Demand> many{{0, 0, 1, 10}, {1, 0, 1, 10}, {2, 0, 1, 10}, {3, 0, 1, 10}};
  const auto t = hueon::testing::line_topology(2);
  const OsnrProvider o3(hueon::testing::uniform_table(t, 0.05, 0.05));
  EXPECT_THROW(brute_force_opt(t, many, ModulationTable::standard(), o3), InstanceTooLarge);
}

// Independent check on tiny instances: enumerate every joint choice of
// (route, scheme, format, start) without pruning and compare optima.
TEST(OracleProperty, MatchesUnprunedEnumeration) {
  Rng rng(31);
  const auto table = ModulationTable::standard();
  for (int trial = 0; trial < 40; ++trial) {
    auto inst = hueon::testing::random_tiny_instance(rng, 8);
    if (inst.demands.size() > 2) inst.demands.resize(2);
    const OsnrProvider osnr(inst.table);
    const auto fast = brute_force_opt(inst.topology, inst.demands, table, osnr);

    struct Choice {
      std::vector<LinkId> links;
      std::vector<FiberKind> fibers;
      std::size_t fs;
    };
    std::vector<std::vector<Choice>> per;
    for (const auto& d : inst.demands) {
      per.emplace_back();
      for (const auto& route : simple_routes(inst.topology, d.src, d.dst)) {
        const auto links = inst.topology.route_links(route);
        for (unsigned bits = 0; bits < (1u << links.size()); ++bits) {
          std::vector<FiberKind> fibers;
          double r = 0;
          for (std::size_t i = 0; i < links.size(); ++i) {
            fibers.push_back((bits >> i) & 1u ? FiberKind::Ull : FiberKind::Ssmf);
            r += inst.table.reciprocal(links[i], fibers.back());
          }
          for (const auto& m : table.formats()) {
            if (10.0 * std::log10(1.0 / r) >= m.osnr_threshold_db - 1e-12) {
              per.back().push_back({links, fibers, required_fs(d.bandwidth_gbps, m)});
            }
          }
        }
      }
    }
    const std::size_t beta = inst.topology.total_slots();
    std::size_t best = SIZE_MAX;
    std::vector<std::vector<std::vector<bool>>> used(
        inst.topology.link_count(), std::vector<std::vector<bool>>(2, std::vector<bool>(beta, false)));
    const auto rec = [&](auto&& self, std::size_t d, std::size_t end) -> void {
      if (d == per.size()) {
        best = std::min(best, end);
        return;
      }
      for (const auto& c : per[d]) {
        for (std::size_t s = 0; s + c.fs <= beta; ++s) {
          bool ok = true;
          for (std::size_t i = 0; i < c.links.size(); ++i) {
            for (std::size_t k = s; k < s + c.fs; ++k) ok = ok && !used[c.links[i]][index_of(c.fibers[i])][k];
          }
          if (!ok) continue;
          for (std::size_t i = 0; i < c.links.size(); ++i) {
            for (std::size_t k = s; k < s + c.fs; ++k) used[c.links[i]][index_of(c.fibers[i])][k] = true;
          }
          self(self, d + 1, std::max(end, s + c.fs));
          for (std::size_t i = 0; i < c.links.size(); ++i) {
            for (std::size_t k = s; k < s + c.fs; ++k) used[c.links[i]][index_of(c.fibers[i])][k] = false;
          }
        }
      }
    };
    rec(rec, 0, 0);
    ASSERT_EQ(fast.feasible, best != SIZE_MAX) << "trial " << trial;
    if (fast.feasible) EXPECT_EQ(fast.optimum, best) << "trial " << trial;
  }
}

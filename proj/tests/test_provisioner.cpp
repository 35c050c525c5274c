#include <gtest/gtest.h>

#include <algorithm>

#include "hueon/errors.hpp"
#include "hueon/oracle.hpp"
#include "hueon/provisioner.hpp"
#include "hueon/validator.hpp"
#include "test_support.hpp"

using namespace hueon;
using hueon::testing::Ring4;

namespace {

constexpr auto S = FiberKind::Ssmf;
constexpr auto U = FiberKind::Ull;

struct Run {
  std::vector<LightpathAssignment> placed;
  std::size_t blocked = 0;
  std::size_t max_fs = 0;
};

Run provision_all(const Topology& t, std::span<const Demand> demands, const ProvisionContext& ctx,
                  StrategyConfig strategy, Algorithm algorithm = Algorithm::Swp) {
  NetworkState st(t);
  Provisioner p(ctx, strategy);
  Run run;
  for (const Demand& d : demands) {
    if (auto a = p.provision(st, d, algorithm)) {
      run.placed.push_back(*a);
    } else {
      ++run.blocked;
    }
  }
  run.max_fs = st.max_fs_used();
  EXPECT_TRUE(check_state(st, *ctx.table, ctx.osnr).empty());
  return run;
}

std::vector<Demand> reorder(const std::vector<Demand>& d, std::initializer_list<std::size_t> order) {
  std::vector<Demand> out;
  for (std::size_t i : order) out.push_back(d[i]);
  return out;
}

}  // namespace

TEST(FormatSchedule, SkipsFormatsWithEqualSlotCounts) {
  const auto table = ModulationTable::standard();
  // 160 Gb/s: 2, 2, 2, 3, 4, 7 slots
  EXPECT_EQ(format_schedule(160, table), (std::vector<std::size_t>{2, 3, 4, 5}));
  // 150 Gb/s: 1, 2, 2, 2, 3, 6
  EXPECT_EQ(format_schedule(150, table), (std::vector<std::size_t>{0, 3, 4, 5}));
  // 10 Gb/s: one slot everywhere
  EXPECT_EQ(format_schedule(10, table), (std::vector<std::size_t>{5}));
}

class Ring4Provisioning : public ::testing::Test {
 protected:
  Ring4 fig = Ring4::load();
  ModulationTable table = ModulationTable::standard();
  OsnrProvider lookup{fig.path_osnr};

  ProvisionContext context(FiberMask mask = {}) {
    ProvisionContext c;
    c.table = &table;
    c.osnr = &lookup;
    c.link_osnr = &fig.oa;
    c.mask = mask;
    return c;
  }
};

TEST_F(Ring4Provisioning, SsmfOnlyNeedsElevenSlots) {
  const auto run = provision_all(fig.topology, fig.demands, context(FiberMask::ssmf_only()), {StrategyKind::Su});
  EXPECT_EQ(run.blocked, 0u);
  EXPECT_EQ(run.max_fs, 11u);
  ASSERT_EQ(run.placed.size(), 3u);
  EXPECT_EQ(run.placed[1].format.name, "BPSK");
  EXPECT_EQ(run.placed[1].fs_count, 7u);
  EXPECT_EQ(run.placed[2].start_slot, 7u);
}

TEST_F(Ring4Provisioning, UllFirstNeedsSixSlots) {
  const auto run = provision_all(fig.topology, fig.demands, context(), {StrategyKind::Uff});
  EXPECT_EQ(run.max_fs, 6u);
  for (const auto& a : run.placed) {
    for (FiberKind k : a.fibers) EXPECT_EQ(k, U);
  }
  const auto ull = provision_all(fig.topology, fig.demands, context(FiberMask::ull_only()), {StrategyKind::Su});
  EXPECT_EQ(ull.max_fs, 6u);
}

TEST_F(Ring4Provisioning, OsnrAwareReachesFourWithSingleHopDemandsFirst) {
  // A->B, C->D, B->D
  const auto demands = reorder(fig.demands, {0, 2, 1});
  const auto run = provision_all(fig.topology, demands, context(), {StrategyKind::Oa});
  EXPECT_EQ(run.blocked, 0u);
  EXPECT_EQ(run.max_fs, 4u);
  ASSERT_EQ(run.placed.size(), 3u);
  EXPECT_EQ(run.placed[2].fibers, (std::vector<FiberKind>{S, U}));
  EXPECT_EQ(run.placed[2].format.name, "QPSK");
}

TEST_F(Ring4Provisioning, OsnrAwareInListedOrderStopsAtSeven) {
  // first fit lets C->D take 8-QAM on the ULL fiber above B->D
  const auto run = provision_all(fig.topology, fig.demands, context(), {StrategyKind::Oa});
  EXPECT_EQ(run.blocked, 0u);
  EXPECT_EQ(run.max_fs, 7u);
}

TEST_F(Ring4Provisioning, HeuristicsNeverBeatTheOracle) {
  for (FiberMask mask : {FiberMask{}, FiberMask::ssmf_only(), FiberMask::ull_only()}) {
    const auto best = brute_force_opt(fig.topology, fig.demands, table, lookup, mask);
    ASSERT_TRUE(best.feasible);
    for (auto kind : {StrategyKind::Uff, StrategyKind::Oa, StrategyKind::Su}) {
      const auto run = provision_all(fig.topology, fig.demands, context(mask), {kind});
      if (run.blocked == 0) EXPECT_GE(run.max_fs, best.optimum);
    }
  }
}

TEST(Provisioner, BlocksWhenNoFormatReachesThreshold) {
  const auto t = hueon::testing::line_topology(2);
  const auto table = ModulationTable::standard();
  const OsnrProvider osnr(hueon::testing::uniform_table(t, 1.0 / db_to_linear(8.9), 1.0 / db_to_linear(8.95)));
  ProvisionContext ctx{&table, &osnr, nullptr, {}};
  NetworkState st(t);
  for (auto kind : {StrategyKind::Random, StrategyKind::Uff, StrategyKind::Oa, StrategyKind::Su}) {
    EXPECT_FALSE(provision_swp(st, {1, 0, 1, 50}, {kind}, ctx));
    EXPECT_FALSE(provision_sp(st, {1, 0, 1, 50}, {kind}, ctx));
  }
  EXPECT_EQ(st.occupied_slots(), 0u);
  Provisioner p(ctx, {StrategyKind::Su});
  EXPECT_THROW(p.plan(st, {1, 0, 1, 0}), InvalidBandwidth);
}

TEST(Provisioner, TakesLowestStartOfBestFormat) {
  const auto t = hueon::testing::line_topology(2);
  const auto table = ModulationTable::standard();
  const OsnrProvider osnr(hueon::testing::uniform_table(t, 0.05, 0.02));  // 13.0 / 17.0 dB
  ProvisionContext ctx{&table, &osnr, nullptr, {}};
  NetworkState st(t);
  Provisioner p(ctx, {StrategyKind::Su});
  // 100 Gb/s: 16-QAM out of reach, both fibers carry QPSK in 2 slots
  const auto a = p.provision(st, {1, 0, 1, 100});
  ASSERT_TRUE(a);
  EXPECT_EQ(a->start_slot, 0u);
  EXPECT_EQ(a->fs_count, 2u);
  const auto b = p.provision(st, {2, 0, 1, 100});
  ASSERT_TRUE(b);
  EXPECT_EQ(b->start_slot, 0u);  // other fiber still free at slot 0
  EXPECT_NE(a->fibers[0], b->fibers[0]);
  const auto c = p.provision(st, {3, 0, 1, 100});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->start_slot, 2u);
}

TEST(Provisioner, SwpDetoursWhereShortestPathBlocks) {
  Topology t(4);
  for (const char* n : {"A", "B", "C"}) t.add_node(n);
  t.add_link("A", "C", 100);
  t.add_link("A", "B", 100);
  t.add_link("B", "C", 100);
  const auto table = ModulationTable::standard();
  const OsnrProvider osnr(hueon::testing::uniform_table(t, 0.01, 0.005));
  ProvisionContext ctx{&table, &osnr, nullptr, {}};
  NetworkState st(t);
  // fill the direct link on both fibers
  Provisioner filler(ctx, {StrategyKind::Uff});
  for (DemandId id = 0; id < 2; ++id) ASSERT_TRUE(filler.provision(st, {id, 0, 2, 400}, Algorithm::ShortestPath));
  EXPECT_FALSE(st.window_free(0, S, {0, 1}));
  EXPECT_FALSE(st.window_free(0, U, {0, 1}));

  Provisioner sp(ctx, {StrategyKind::Uff});
  EXPECT_FALSE(sp.plan(st, {9, 0, 2, 50}, Algorithm::ShortestPath));
  Provisioner swp(ctx, {StrategyKind::Uff});
  const auto a = swp.plan(st, {9, 0, 2, 50}, Algorithm::Swp);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->route, (std::vector<NodeId>{0, 1, 2}));
}

TEST(ProvisionerProperty, SingleDemandNeverBeatsOracle) {
  Rng rng(2024);
  const auto table = ModulationTable::standard();
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = hueon::testing::random_tiny_instance(rng);
    const OsnrProvider osnr(inst.table);
    ProvisionContext ctx{&table, &osnr, nullptr, {}};
    const Demand d = inst.demands.front();
    const std::vector<Demand> one{d};
    const auto best = brute_force_opt(inst.topology, one, table, osnr);
    NetworkState st(inst.topology);
    const auto a = provision_swp(st, d, {StrategyKind::Su}, ctx);
    if (!a) continue;
    ASSERT_TRUE(best.feasible) << "trial " << trial;
    ++checked;
    EXPECT_GE(a->end_slot(), best.optimum);
    EXPECT_TRUE(check_assignments(inst.topology, std::span(&*a, 1), table, &osnr, one).empty());
  }
  EXPECT_GT(checked, 100);
}

TEST(ProvisionerProperty, RandomInstancesStayValid) {
  Rng rng(7);
  const auto table = ModulationTable::standard();
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = hueon::testing::random_tiny_instance(rng);
    const OsnrProvider osnr(inst.table);
    ProvisionContext ctx{&table, &osnr, nullptr, {}};
    for (auto kind : {StrategyKind::Random, StrategyKind::Uff, StrategyKind::Oa, StrategyKind::Su}) {
      StrategyConfig cfg{kind};
      cfg.seed = static_cast<std::uint64_t>(trial) + 1;
      for (auto alg : {Algorithm::Swp, Algorithm::ShortestPath}) {
        const auto run = provision_all(inst.topology, inst.demands, ctx, cfg, alg);
        EXPECT_TRUE(check_assignments(inst.topology, run.placed, table, &osnr, inst.demands).empty());
      }
    }
  }
}

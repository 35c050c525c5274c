#include <gtest/gtest.h>

#include <string>

#include "hueon/errors.hpp"
#include "hueon/strategy.hpp"
#include "test_support.hpp"

using namespace hueon;

namespace {

constexpr auto S = FiberKind::Ssmf;
constexpr auto U = FiberKind::Ull;

// Occupancy as a '0'/'1' string, scanned independently of the library.
std::string bits(const SpectrumMap& m) {
  std::string s;
  for (DemandId o : m.owners()) s += o == kFreeSlot ? '0' : '1';
  return s;
}

std::size_t blocks_at_least(const std::string& s, std::size_t f) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while ((pos = s.find('0', pos)) != std::string::npos) {
    std::size_t end = s.find('1', pos);
    if (end == std::string::npos) end = s.size();
    if (end - pos >= f) ++n;
    pos = end;
  }
  return n;
}

std::size_t transitions(const std::string& s) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < s.size(); ++i) n += s[i] != s[i - 1];
  return n;
}

void take(NetworkState& st, const Topology& t, DemandId id, NodeId a, FiberKind k, std::size_t start,
          std::size_t count) {
  LightpathAssignment x;
  x.demand = id;
  x.route = {a, a + 1};
  x.links = t.route_links(x.route);
  x.fibers = {k};
  x.start_slot = start;
  x.fs_count = count;
  st.reserve(x);
}

}  // namespace

TEST(Views, EveryViewIsEmptyIffNoFiberFree) {
  Rng rng(1);
  for (bool s : {false, true}) {
    for (bool u : {false, true}) {
      const bool any = s || u;
      EXPECT_EQ(!view_random(s, u, rng).empty(), any);
      EXPECT_EQ(!view_oa(s, u, 1.5, 1.12).empty(), any);
      EXPECT_EQ(!view_su(s, u).empty(), any);
      EXPECT_EQ(!view_uff(UffPhase::UllPass, s, u).empty(), u);
      EXPECT_EQ(!view_uff(UffPhase::SsmfPass, s, u).empty(), s);
    }
  }
}

TEST(Views, OaComparesGainWithAlpha) {
  EXPECT_EQ(view_oa(true, true, 1.2, 1.12), FiberSet::only(U));
  EXPECT_EQ(view_oa(true, true, 1.12, 1.12), FiberSet::only(S));  // strictly greater needed
  EXPECT_EQ(view_oa(true, false, 9.0, 1.12), FiberSet::only(S));
  EXPECT_EQ(view_oa(false, true, 0.5, 1.12), FiberSet::only(U));
}

TEST(Views, SuKeepsBothFibers) {
  EXPECT_EQ(view_su(true, true), FiberSet::both());
  EXPECT_EQ(view_su(false, true), FiberSet::only(U));
}

TEST(Views, RandomIsRoughlyFair) {
  Rng rng(5);
  int ull = 0;
  for (int i = 0; i < 20000; ++i) ull += view_random(true, true, rng).has(U);
  EXPECT_NEAR(ull / 20000.0, 0.5, 0.02);
}

TEST(PlaneMapper, MaskHidesFibers) {
  const auto t = hueon::testing::line_topology(2);
  NetworkState st(t);
  StrategyConfig su{StrategyKind::Su};
  PlaneMapper only_s(su, nullptr, nullptr, FiberMask::ssmf_only());
  EXPECT_EQ(only_s.map(st, 0, {0, 2}), FiberSet::only(S));
  StrategyConfig oa{StrategyKind::Oa};
  PlaneMapper no_table(oa, nullptr, nullptr);
  EXPECT_THROW(no_table.map(st, 0, {0, 2}), MissingEntry);
  StrategyConfig random{StrategyKind::Random};
  EXPECT_THROW(PlaneMapper(random, nullptr, nullptr), InvalidParams);
}

TEST(StrategyConfig, ParseAndValidate) {
  EXPECT_EQ(parse_strategy("R"), StrategyKind::Random);
  EXPECT_EQ(parse_strategy("OA"), StrategyKind::Oa);
  EXPECT_THROW(parse_strategy("best"), ConfigError);
  StrategyConfig c{StrategyKind::Oa};
  c.alpha = 0;
  EXPECT_THROW(c.validate(), InvalidParams);
}

TEST(FragmentationCounts, AgreeWithStringScan) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    SpectrumMap m(1 + uniform_int(rng, 0, 100));
    for (DemandId id = 0; id < 20; ++id) {
      const Window w{uniform_int(rng, 0, m.total_slots() - 1), 1 + uniform_int(rng, 0, 6)};
      if (m.window_free(w)) m.occupy(w, id);
    }
    const auto s = bits(m);
    for (std::size_t f = 1; f < 8; ++f) ASSERT_EQ(count_free_blocks(m, f), blocks_at_least(s, f));
    ASSERT_EQ(count_state_changes(m), transitions(s));
  }
}

// Two-hop route, 150 Gb/s. SSMF r = 0.025 per hop and ULL r = 0.01 put
// SS and the mixed schemes at QPSK (3 slots) and UU at 8-QAM (2 slots).
class SuScheme : public ::testing::Test {
 protected:
  Topology t = hueon::testing::line_topology(3, 100, 320);
  NetworkState st{t};
  OsnrProvider osnr{hueon::testing::uniform_table(t, 0.025, 0.01)};
  ModulationTable table = ModulationTable::standard();
  std::vector<NodeId> route{0, 1, 2};
  std::vector<LinkId> links{0, 1};

  void SetUp() override {
    take(st, t, 1, 0, S, 10, 10);
    take(st, t, 2, 0, U, 5, 3);
    take(st, t, 3, 0, U, 30, 10);
    take(st, t, 4, 1, S, 100, 10);
    take(st, t, 5, 1, U, 50, 2);
    take(st, t, 6, 1, U, 60, 2);
  }

  double expected_cost(const std::vector<FiberKind>& scheme, double omega) {
    std::size_t n = 0;
    std::size_t changes = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      const auto s = bits(st.spectrum(links[i], scheme[i]));
      n += blocks_at_least(s, 3);
      changes += transitions(s);
    }
    return static_cast<double>(n) * static_cast<double>(changes) / 319.0 * omega;
  }
};

TEST_F(SuScheme, CostsMatchHandCount) {
  const SuRequest req{route, links, 150.0, 4, {0, 3}};  // QPSK window [0, 3)
  const auto all = su_evaluate(st, req, table, osnr, {});
  ASSERT_EQ(all.size(), 4u);
  const std::vector<std::vector<FiberKind>> order{{S, S}, {S, U}, {U, S}, {U, U}};
  const double omega[] = {1.0, 0.8, 0.8, 1.2};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(all[i].scheme, order[i]);
    EXPECT_DOUBLE_EQ(all[i].omega, omega[i]);
    EXPECT_NEAR(all[i].cost, expected_cost(order[i], omega[i]), 1e-12);
    EXPECT_EQ(all[i].max_changes, 319u);
  }
  // hand count for UU: 3 + 3 blocks, 4 + 4 transitions
  EXPECT_EQ(all[3].n_blocks, 6u);
  EXPECT_EQ(all[3].state_changes, 8u);
  const auto pick = su_enumerate_and_pick(st, req, table, osnr, {});
  ASSERT_TRUE(pick);
  EXPECT_EQ(pick->scheme, (std::vector<FiberKind>{U, U}));
}

TEST_F(SuScheme, ThresholdAndWindowFilter) {
  // 8-QAM window: only UU reaches 16 dB
  const SuRequest eight{route, links, 150.0, 3, {0, 2}};
  const auto all = su_evaluate(st, eight, table, osnr, {});
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].scheme, (std::vector<FiberKind>{U, U}));
  // window busy on link 0 ULL: schemes with ULL first are skipped
  const SuRequest busy{route, links, 150.0, 4, {5, 3}};
  for (const auto& c : su_evaluate(st, busy, table, osnr, {})) EXPECT_EQ(c.scheme[0], S);
  // mask removes ULL entirely
  const SuRequest req{route, links, 150.0, 4, {0, 3}};
  const auto masked = su_evaluate(st, req, table, osnr, {}, FiberMask::ssmf_only());
  ASSERT_EQ(masked.size(), 1u);
  EXPECT_EQ(masked[0].scheme, (std::vector<FiberKind>{S, S}));
}

TEST(SuTieBreak, EmptyNetworkPicksFirstScheme) {
  const auto t = hueon::testing::line_topology(3, 100, 32);
  NetworkState st(t);
  OsnrProvider osnr(hueon::testing::uniform_table(t, 0.025, 0.01));
  const std::vector<NodeId> route{0, 1, 2};
  const std::vector<LinkId> links{0, 1};
  const auto pick = su_enumerate_and_pick(st, {route, links, 150.0, 4, {0, 3}}, ModulationTable::standard(), osnr, {});
  ASSERT_TRUE(pick);
  EXPECT_EQ(pick->cost, 0.0);
  EXPECT_EQ(pick->scheme, (std::vector<FiberKind>{S, S}));
}

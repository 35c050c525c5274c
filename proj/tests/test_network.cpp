#include <gtest/gtest.h>

#include "hueon/errors.hpp"
#include "hueon/network.hpp"
#include "test_support.hpp"

using namespace hueon;

namespace {

LightpathAssignment path(DemandId id, std::vector<NodeId> route, std::vector<FiberKind> fibers, std::size_t start,
                         std::size_t count, const Topology& t) {
  LightpathAssignment a;
  a.demand = id;
  a.bandwidth_gbps = 50.0 * static_cast<double>(count);
  a.links = t.route_links(route);
  a.route = std::move(route);
  a.fibers = std::move(fibers);
  a.format = ModulationTable::standard()[4];
  a.start_slot = start;
  a.fs_count = count;
  return a;
}

constexpr auto S = FiberKind::Ssmf;
constexpr auto U = FiberKind::Ull;

}  // namespace

TEST(NetworkState, ReserveAndRelease) {
  const auto t = hueon::testing::line_topology(3);
  NetworkState st(t);
  st.reserve(path(1, {0, 1, 2}, {S, U}, 2, 3, t));
  EXPECT_TRUE(st.holds(1));
  EXPECT_FALSE(st.window_free(0, S, {2, 1}));
  EXPECT_TRUE(st.window_free(0, U, {2, 3}));
  EXPECT_FALSE(st.window_free(1, U, {4, 1}));
  EXPECT_EQ(st.max_fs_used(), 5u);
  EXPECT_EQ(st.occupied_slots(), 6u);
  st.release(1);
  EXPECT_EQ(st.max_fs_used(), 0u);
  EXPECT_EQ(st.occupied_slots(), 0u);
  EXPECT_THROW(st.release(1), UnknownDemand);
}

TEST(NetworkState, OverlapLeavesStateUntouched) {
  const auto t = hueon::testing::line_topology(3);
  NetworkState st(t);
  st.reserve(path(1, {1, 2}, {U}, 0, 4, t));
  // first link free, second overlaps: nothing may be written
  EXPECT_THROW(st.reserve(path(2, {0, 1, 2}, {S, U}, 3, 2, t)), OverlapError);
  EXPECT_TRUE(st.window_free(0, S, {0, 16}));
  EXPECT_FALSE(st.holds(2));
  EXPECT_THROW(st.reserve(path(3, {0, 1}, {S}, 15, 2, t)), RangeError);
  EXPECT_THROW(st.reserve(path(1, {0, 1}, {S}, 8, 1, t)), InvalidParams);  // id already live
}

TEST(NetworkState, RejectsMalformedAssignments) {
  Topology t(16);
  for (const char* n : {"A", "B", "C"}) t.add_node(n);
  t.add_link("A", "B", 10);
  t.add_link("B", "C", 10);
  t.add_link("C", "A", 10);
  NetworkState st(t);
  auto a = path(1, {0, 1, 2}, {S, S}, 0, 1, t);
  a.fibers.pop_back();
  EXPECT_THROW(st.reserve(a), InvalidParams);
  auto loop = path(2, {0, 1, 2, 0}, {S, S, S}, 0, 1, t);
  EXPECT_THROW(st.reserve(loop), InvalidParams);
  auto wrong = path(3, {0, 1}, {S}, 0, 1, t);
  wrong.links = {1};
  EXPECT_THROW(st.reserve(wrong), InvalidParams);
}

// Any sequence of reserves followed by the releases in any order restores
// the empty state.
TEST(NetworkStateProperty, ReleaseInvertsReserve) {
  const auto t = hueon::testing::line_topology(5, 100, 32);
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    NetworkState st(t);
    std::vector<DemandId> live;
    for (DemandId id = 0; id < 30; ++id) {
      const NodeId a = uniform_int(rng, 0, 3);
      const NodeId b = uniform_int(rng, a + 1, 4);
      std::vector<NodeId> route;
      std::vector<FiberKind> fibers;
      for (NodeId n = a; n <= b; ++n) route.push_back(n);
      for (NodeId n = a; n < b; ++n) fibers.push_back(coin_flip(rng) ? U : S);
      const auto asg = path(id, route, fibers, uniform_int(rng, 0, 28), 1 + uniform_int(rng, 0, 3), t);
      try {
        st.reserve(asg);
        live.push_back(id);
      } catch (const OverlapError&) {
      } catch (const RangeError&) {
      }
    }
    for (std::size_t i = live.size(); i > 1; --i) std::swap(live[i - 1], live[uniform_int(rng, 0, i - 1)]);
    for (DemandId id : live) st.release(id);
    EXPECT_EQ(st.occupied_slots(), 0u);
    EXPECT_TRUE(st.live().empty());
  }
}

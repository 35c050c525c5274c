#include "hueon/swp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hueon/errors.hpp"

namespace hueon {

namespace {

bool nearly_equal(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

template <typename Present>
std::optional<Route> dijkstra(const Topology& topology, NodeId src, NodeId dst, Present present) {
  const std::size_t n = topology.node_count();
  if (src >= n || dst >= n) throw TopologyError("route endpoint out of range");
  if (src == dst) throw InvalidParams("source and destination must differ");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<std::vector<NodeId>> path(n);
  std::vector<bool> done(n, false);
  dist[src] = 0.0;
  path[src] = {src};

  for (;;) {
    NodeId u = n;
    for (NodeId v = 0; v < n; ++v) {
      if (done[v] || dist[v] == kInf) continue;
      if (u == n || dist[v] < dist[u] - 1e-12 || (nearly_equal(dist[v], dist[u]) && path[v] < path[u])) u = v;
    }
    if (u == n) return std::nullopt;
    if (u == dst) break;
    done[u] = true;
    for (LinkId l : topology.incident(u)) {
      if (!present(l)) continue;
      const NodeId v = topology.link(l).other(u);
      if (done[v]) continue;
      const double cand = dist[u] + topology.link(l).distance_km;
      const bool tie = nearly_equal(cand, dist[v]);
      if ((!tie && cand < dist[v]) || (tie && [&] {
            auto p = path[u];
            p.push_back(v);
            return p < path[v];
          }())) {
        dist[v] = cand;
        path[v] = path[u];
        path[v].push_back(v);
      }
    }
  }

  Route route;
  route.nodes = std::move(path[dst]);
  route.links = topology.route_links(route.nodes);
  route.length_km = dist[dst];
  return route;
}

}  // namespace

SpectrumWindowPlane make_plane(const NetworkState& state, Window window, PlaneMapper& mapper) {
  const Topology& topology = state.topology();
  SpectrumWindowPlane plane;
  plane.window = window;
  plane.links.resize(topology.link_count());
  for (LinkId l = 0; l < topology.link_count(); ++l) {
    plane.links[l].fibers = mapper.map(state, l, window);
    plane.links[l].weight_km = topology.link(l).distance_km;
  }
  return plane;
}

std::vector<SpectrumWindowPlane> create_swp_list(const NetworkState& state, std::size_t fs_count,
                                                 PlaneMapper& mapper) {
  if (fs_count == 0 || fs_count > state.total_slots()) throw RangeError("slot count outside 1..total_slots");
  std::vector<SpectrumWindowPlane> planes;
  planes.reserve(state.total_slots() - fs_count + 1);
  for (std::size_t start = 0; start + fs_count <= state.total_slots(); ++start) {
    planes.push_back(make_plane(state, {start, fs_count}, mapper));
  }
  return planes;
}

std::optional<Route> shortest_route(const Topology& topology, const SpectrumWindowPlane& plane, NodeId src,
                                    NodeId dst) {
  return dijkstra(topology, src, dst, [&](LinkId l) { return plane.links[l].present(); });
}

std::optional<Route> shortest_route(const Topology& topology, NodeId src, NodeId dst) {
  return dijkstra(topology, src, dst, [](LinkId) { return true; });
}

}  // namespace hueon

#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "hueon/topology.hpp"

namespace hueon {

/// Parameters of the ASE-only link model used when no OSNR table is given.
///
/// Each link is cut into ceil(distance / max_span_km) equal spans with an
/// amplifier after every span. One span contributes a reciprocal OSNR of
///
///   NF * h * nu * G * Rs / P
///
/// where G = 10^(attenuation * span_length / 10) is the span loss, Rs the
/// symbol rate (noise bandwidth) and P the launch power per channel.
struct PhyParams {
  double launch_power_dbm = -6.0;
  double noise_figure_db = 6.0;
  double symbol_rate_gbaud = 32.0;
  double center_frequency_thz = 193.4;
  double max_span_km = 80.0;

  void validate() const;  // throws InvalidParams
};

inline constexpr double kPlanckConstant = 6.62607015e-34;  // J*s

std::size_t span_count(double distance_km, double max_span_km);

/// Reciprocal linear OSNR contributed by one fiber of a link.
double default_link_osnr(const Link& link, FiberKind kind, const PhyParams& params);

/// Per (link, fiber) reciprocal linear OSNR contributions.
///
/// A ULL entry may never exceed the SSMF entry of the same link.
class LinkOsnrTable {
 public:
  LinkOsnrTable() = default;
  explicit LinkOsnrTable(std::size_t link_count) : entries_(link_count) {}

  static LinkOsnrTable from_model(const Topology& topology, const PhyParams& params);

  void set(LinkId link, FiberKind kind, double reciprocal);
  bool has(LinkId link, FiberKind kind) const;
  double reciprocal(LinkId link, FiberKind kind) const;  // throws MissingEntry
  std::size_t link_count() const { return entries_.size(); }

  /// r(SSMF) / r(ULL): the linear per-link OSNR ratio ULL over SSMF.
  double ull_gain(LinkId link) const;

 private:
  std::vector<std::array<std::optional<double>, 2>> entries_;
};

/// Path OSNR values (dB) keyed by route and per-link fiber choice.
///
/// Keys are direction-agnostic: B-C-D with (SSMF, ULL) is the same path as
/// D-C-B with (ULL, SSMF).
class PathOsnrLookup {
 public:
  void add(std::vector<NodeId> route, std::vector<FiberKind> fibers, double osnr_db);
  std::optional<double> find_db(std::span<const NodeId> route, std::span<const FiberKind> fibers) const;
  std::size_t size() const { return entries_.size(); }

 private:
  using Key = std::pair<std::vector<NodeId>, std::vector<FiberKind>>;
  static Key normalize(std::span<const NodeId> route, std::span<const FiberKind> fibers);
  std::map<Key, double> entries_;
};

/// Source of end-to-end path OSNR: either the reciprocal sum over a
/// LinkOsnrTable or a literal per-path lookup.
class OsnrProvider {
 public:
  explicit OsnrProvider(LinkOsnrTable table) : source_(std::move(table)) {}
  explicit OsnrProvider(PathOsnrLookup lookup) : source_(std::move(lookup)) {}

  /// Linear path OSNR. Throws MissingEntry when the provider has no data,
  /// EmptyRoute for routes without links.
  double path_osnr_linear(std::span<const NodeId> route, std::span<const LinkId> links,
                          std::span<const FiberKind> fibers) const;

  /// As above, but returns nullopt instead of throwing MissingEntry.
  std::optional<double> try_path_osnr_linear(std::span<const NodeId> route, std::span<const LinkId> links,
                                             std::span<const FiberKind> fibers) const;

  const LinkOsnrTable* link_table() const { return std::get_if<LinkOsnrTable>(&source_); }
  const PathOsnrLookup* lookup() const { return std::get_if<PathOsnrLookup>(&source_); }

 private:
  std::variant<LinkOsnrTable, PathOsnrLookup> source_;
};

/// Path OSNR in dB for a node route.
double path_osnr(const Topology& topology, std::span<const NodeId> route, std::span<const FiberKind> fibers,
                 const OsnrProvider& provider);

}  // namespace hueon

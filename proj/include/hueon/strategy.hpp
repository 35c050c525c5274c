#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hueon/modulation.hpp"
#include "hueon/network.hpp"
#include "hueon/osnr.hpp"
#include "hueon/rng.hpp"

namespace hueon {

enum class StrategyKind { Random, Uff, Oa, Su };

std::string_view to_string(StrategyKind kind);
StrategyKind parse_strategy(std::string_view text);  // "random" | "uff" | "oa" | "su"

/// Weight factor Omega of the spectrum-usage cost.
struct SuWeights {
  double ull_gain = 1.2;     // scheme uses ULL and needs fewer slots than all-SSMF
  double ull_no_gain = 0.8;  // scheme uses ULL without saving slots
  double ssmf = 1.0;         // all-SSMF scheme
};

struct StrategyConfig {
  StrategyKind kind = StrategyKind::Random;
  std::uint64_t seed = 1;  // Random only
  double alpha = 1.12;     // OA only
  SuWeights su;

  void validate() const;  // throws InvalidParams
};

/// Subset of {SSMF, ULL}.
class FiberSet {
 public:
  constexpr FiberSet() = default;
  static constexpr FiberSet none() { return FiberSet(0); }
  static constexpr FiberSet only(FiberKind k) { return FiberSet(static_cast<std::uint8_t>(1u << index_of(k))); }
  static constexpr FiberSet both() { return FiberSet(3); }

  constexpr bool has(FiberKind k) const { return (bits_ >> index_of(k)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  /// The fiber when exactly one is present.
  std::optional<FiberKind> single() const;

  friend constexpr bool operator==(FiberSet, FiberSet) = default;

 private:
  constexpr explicit FiberSet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

/// Fibers that exist for provisioning purposes. Masked fibers are treated
/// as permanently busy.
struct FiberMask {
  bool ssmf = true;
  bool ull = true;

  bool allows(FiberKind k) const { return k == FiberKind::Ssmf ? ssmf : ull; }
  static FiberMask ssmf_only() { return {true, false}; }
  static FiberMask ull_only() { return {false, true}; }
};

enum class UffPhase { UllPass, SsmfPass };

// Per-link mapping decisions. Each takes whether the window is free on the
// SSMF and on the ULL fiber and returns the fiber(s) mapped onto the plane.
// Every view returns an empty set iff neither fiber is free.

FiberSet view_random(bool ssmf_free, bool ull_free, Rng& rng);
FiberSet view_uff(UffPhase phase, bool ssmf_free, bool ull_free);
/// `ull_gain` is r(SSMF) / r(ULL). ULL wins only when the gain exceeds alpha.
FiberSet view_oa(bool ssmf_free, bool ull_free, double ull_gain, double alpha);
FiberSet view_su(bool ssmf_free, bool ull_free);

/// Binds a strategy to a spectrum state to build virtual links of a plane.
class PlaneMapper {
 public:
  /// `rng` is needed for Random, `link_osnr` for OA (MissingEntry otherwise).
  PlaneMapper(const StrategyConfig& config, Rng* rng, const LinkOsnrTable* link_osnr, FiberMask mask = {},
              UffPhase phase = UffPhase::UllPass);

  FiberSet map(const NetworkState& state, LinkId link, Window window);

  const StrategyConfig& config() const { return *config_; }

 private:
  const StrategyConfig* config_;
  Rng* rng_;
  const LinkOsnrTable* link_osnr_;
  FiberMask mask_;
  UffPhase phase_;
};

/// Maximal free runs of at least `min_length` slots.
std::size_t count_free_blocks(const SpectrumMap& map, std::size_t min_length);

/// Adjacent slot pairs (i, i+1) whose free/busy state differs.
std::size_t count_state_changes(const SpectrumMap& map);

/// One evaluated fiber selection scheme for a fixed route.
struct FiberSchemeCost {
  std::vector<FiberKind> scheme;   // one fiber per route link
  std::size_t n_blocks = 0;        // free blocks >= demand slots, summed over the selected fibers
  std::size_t state_changes = 0;   // free/busy transitions, summed over the selected fibers
  std::size_t max_changes = 0;     // total_slots - 1
  double omega = 1.0;
  double cost = 0.0;               // n_blocks * (state_changes / max_changes) * omega
};

/// Inputs of the spectrum-usage (SU) scheme evaluation.
struct SuRequest {
  std::span<const NodeId> route;
  std::span<const LinkId> links;
  double bandwidth_gbps = 0.0;
  std::size_t format = 0;  // index into the modulation table
  Window window;
};

/// Every fiber scheme over the route whose fibers all have the window free
/// and whose path OSNR meets the format's threshold, with its cost.
/// Schemes are listed in lexicographic order (SSMF before ULL, first link
/// most significant).
std::vector<FiberSchemeCost> su_evaluate(const NetworkState& state, const SuRequest& request,
                                         const ModulationTable& table, const OsnrProvider& osnr,
                                         const SuWeights& weights, FiberMask mask = {});

/// Highest-cost scheme from su_evaluate; ties go to the lexicographically
/// first scheme. nullopt when no scheme is feasible.
std::optional<FiberSchemeCost> su_enumerate_and_pick(const NetworkState& state, const SuRequest& request,
                                                     const ModulationTable& table, const OsnrProvider& osnr,
                                                     const SuWeights& weights, FiberMask mask = {});

}  // namespace hueon

#include "hueon/strategy.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "hueon/errors.hpp"

namespace hueon {

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Random: return "random";
    case StrategyKind::Uff: return "uff";
    case StrategyKind::Oa: return "oa";
    case StrategyKind::Su: return "su";
  }
  return "?";
}

StrategyKind parse_strategy(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "random" || lower == "r") return StrategyKind::Random;
  if (lower == "uff") return StrategyKind::Uff;
  if (lower == "oa") return StrategyKind::Oa;
  if (lower == "su") return StrategyKind::Su;
  throw ConfigError("unknown strategy '" + std::string(text) + "' (expected random, uff, oa or su)");
}

void StrategyConfig::validate() const {
  if (kind == StrategyKind::Oa && !(alpha > 0.0)) throw InvalidParams("OA threshold alpha must be positive");
  if (kind == StrategyKind::Su && !(su.ull_gain > 0.0 && su.ull_no_gain > 0.0 && su.ssmf > 0.0)) {
    throw InvalidParams("SU weights must be positive");
  }
}

std::optional<FiberKind> FiberSet::single() const {
  if (bits_ == 1) return FiberKind::Ssmf;
  if (bits_ == 2) return FiberKind::Ull;
  return std::nullopt;
}

FiberSet view_random(bool ssmf_free, bool ull_free, Rng& rng) {
  if (ssmf_free && ull_free) return FiberSet::only(coin_flip(rng) ? FiberKind::Ull : FiberKind::Ssmf);
  if (ssmf_free) return FiberSet::only(FiberKind::Ssmf);
  if (ull_free) return FiberSet::only(FiberKind::Ull);
  return FiberSet::none();
}

FiberSet view_uff(UffPhase phase, bool ssmf_free, bool ull_free) {
  if (phase == UffPhase::UllPass) return ull_free ? FiberSet::only(FiberKind::Ull) : FiberSet::none();
  return ssmf_free ? FiberSet::only(FiberKind::Ssmf) : FiberSet::none();
}

FiberSet view_oa(bool ssmf_free, bool ull_free, double ull_gain, double alpha) {
  if (ssmf_free && ull_free) return FiberSet::only(ull_gain > alpha ? FiberKind::Ull : FiberKind::Ssmf);
  if (ssmf_free) return FiberSet::only(FiberKind::Ssmf);
  if (ull_free) return FiberSet::only(FiberKind::Ull);
  return FiberSet::none();
}

FiberSet view_su(bool ssmf_free, bool ull_free) {
  if (ssmf_free && ull_free) return FiberSet::both();
  if (ssmf_free) return FiberSet::only(FiberKind::Ssmf);
  if (ull_free) return FiberSet::only(FiberKind::Ull);
  return FiberSet::none();
}

PlaneMapper::PlaneMapper(const StrategyConfig& config, Rng* rng, const LinkOsnrTable* link_osnr, FiberMask mask,
                         UffPhase phase)
    : config_(&config), rng_(rng), link_osnr_(link_osnr), mask_(mask), phase_(phase) {
  if (config.kind == StrategyKind::Random && rng == nullptr) throw InvalidParams("Random strategy needs an rng");
}

FiberSet PlaneMapper::map(const NetworkState& state, LinkId link, Window window) {
  const bool ssmf_free = mask_.ssmf && state.window_free(link, FiberKind::Ssmf, window);
  const bool ull_free = mask_.ull && state.window_free(link, FiberKind::Ull, window);
  switch (config_->kind) {
    case StrategyKind::Random: return view_random(ssmf_free, ull_free, *rng_);
    case StrategyKind::Uff: return view_uff(phase_, ssmf_free, ull_free);
    case StrategyKind::Oa: {
      if (ssmf_free && ull_free) {
        if (link_osnr_ == nullptr) throw MissingEntry("OA strategy needs per-link OSNR data");
        return view_oa(true, true, link_osnr_->ull_gain(link), config_->alpha);
      }
      return view_oa(ssmf_free, ull_free, 1.0, config_->alpha);
    }
    case StrategyKind::Su: return view_su(ssmf_free, ull_free);
  }
  return FiberSet::none();
}

std::size_t count_free_blocks(const SpectrumMap& map, std::size_t min_length) {
  std::size_t blocks = 0;
  std::size_t run = 0;
  for (std::size_t s = 0; s < map.total_slots(); ++s) {
    if (map.is_free(s)) {
      ++run;
      continue;
    }
    if (run > 0 && run >= min_length) ++blocks;
    run = 0;
  }
  if (run > 0 && run >= min_length) ++blocks;
  return blocks;
}

std::size_t count_state_changes(const SpectrumMap& map) {
  std::size_t changes = 0;
  for (std::size_t s = 0; s + 1 < map.total_slots(); ++s) {
    if (map.is_free(s) != map.is_free(s + 1)) ++changes;
  }
  return changes;
}

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Slots the demand would need with the best format the scheme's OSNR admits.
std::size_t achievable_fs(std::span<const NodeId> route, std::span<const LinkId> links,
                          std::span<const FiberKind> scheme, double bandwidth, const ModulationTable& table,
                          const OsnrProvider& osnr) {
  const auto value = osnr.try_path_osnr_linear(route, links, scheme);
  if (!value) return kUnreachable;
  const auto format = best_format_linear(*value, table);
  if (!format) return kUnreachable;
  return required_fs(bandwidth, table[*format]);
}

}  // namespace

std::vector<FiberSchemeCost> su_evaluate(const NetworkState& state, const SuRequest& request,
                                         const ModulationTable& table, const OsnrProvider& osnr,
                                         const SuWeights& weights, FiberMask mask) {
  const std::size_t n = request.links.size();
  if (n == 0) throw EmptyRoute("SU evaluation of an empty route");
  if (n >= 32) throw InstanceTooLarge("route too long for scheme enumeration");
  const std::size_t max_changes = state.total_slots() > 1 ? state.total_slots() - 1 : 1;
  const ModulationFormat& format = table[request.format];

  const std::vector<FiberKind> all_ssmf(n, FiberKind::Ssmf);
  const std::size_t ssmf_fs =
      achievable_fs(request.route, request.links, all_ssmf, request.bandwidth_gbps, table, osnr);

  std::vector<FiberSchemeCost> out;
  std::vector<FiberKind> scheme(n);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    // first link is the most significant bit so the loop runs in lexicographic order
    bool usable = true;
    bool uses_ull = false;
    for (std::size_t i = 0; i < n; ++i) {
      scheme[i] = ((bits >> (n - 1 - i)) & 1u) ? FiberKind::Ull : FiberKind::Ssmf;
      uses_ull = uses_ull || scheme[i] == FiberKind::Ull;
      if (!mask.allows(scheme[i]) || !state.window_free(request.links[i], scheme[i], request.window)) {
        usable = false;
        break;
      }
    }
    if (!usable) continue;

    const auto value = osnr.try_path_osnr_linear(request.route, request.links, scheme);
    if (!value || !meets_threshold(*value, format)) continue;

    FiberSchemeCost c;
    c.scheme = scheme;
    c.max_changes = max_changes;
    for (std::size_t i = 0; i < n; ++i) {
      const SpectrumMap& map = state.spectrum(request.links[i], scheme[i]);
      c.n_blocks += count_free_blocks(map, request.window.count);
      c.state_changes += count_state_changes(map);
    }
    if (!uses_ull) {
      c.omega = weights.ssmf;
    } else {
      const std::size_t fs = achievable_fs(request.route, request.links, scheme, request.bandwidth_gbps, table, osnr);
      c.omega = fs < ssmf_fs ? weights.ull_gain : weights.ull_no_gain;
    }
    c.cost = static_cast<double>(c.n_blocks) * (static_cast<double>(c.state_changes) / static_cast<double>(max_changes)) *
             c.omega;
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<FiberSchemeCost> su_enumerate_and_pick(const NetworkState& state, const SuRequest& request,
                                                     const ModulationTable& table, const OsnrProvider& osnr,
                                                     const SuWeights& weights, FiberMask mask) {
  auto schemes = su_evaluate(state, request, table, osnr, weights, mask);
  if (schemes.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < schemes.size(); ++i) {
    if (schemes[i].cost > schemes[best].cost) best = i;
  }
  return std::move(schemes[best]);
}

}  // namespace hueon

#include "hueon/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

#include "hueon/errors.hpp"

namespace hueon {

namespace {

constexpr std::size_t kWordBits = 64;

std::uint64_t word_mask(std::size_t lo, std::size_t hi) {
  // bits [lo, hi) within one word, hi <= 64
  const std::uint64_t upper = hi == kWordBits ? ~0ULL : ((1ULL << hi) - 1);
  const std::uint64_t lower = (1ULL << lo) - 1;
  return upper & ~lower;
}

}  // namespace

std::string_view to_string(FiberKind kind) {
  return kind == FiberKind::Ssmf ? "SSMF" : "ULL";
}

FiberKind parse_fiber_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "SSMF") return FiberKind::Ssmf;
  if (upper == "ULL") return FiberKind::Ull;
  throw ConfigError("unknown fiber kind '" + std::string(text) + "' (expected SSMF or ULL)");
}

SpectrumMap::SpectrumMap(std::size_t total_slots)
    : owners_(total_slots, kFreeSlot), busy_((total_slots + kWordBits - 1) / kWordBits, 0) {
  if (total_slots == 0) throw InvalidParams("spectrum needs at least one slot");
}

bool SpectrumMap::is_free(std::size_t slot) const {
  return slot < owners_.size() && owners_[slot] == kFreeSlot;
}

bool SpectrumMap::window_free(Window window) const {
  if (window.count == 0 || window.end() > owners_.size()) return false;
  std::size_t slot = window.start;
  const std::size_t end = window.end();
  while (slot < end) {
    const std::size_t word = slot / kWordBits;
    const std::size_t lo = slot % kWordBits;
    const std::size_t hi = std::min(kWordBits, lo + (end - slot));
    if (busy_[word] & word_mask(lo, hi)) return false;
    slot += hi - lo;
  }
  return true;
}

std::optional<DemandId> SpectrumMap::owner(std::size_t slot) const {
  if (slot >= owners_.size()) throw RangeError("slot " + std::to_string(slot) + " out of range");
  if (owners_[slot] == kFreeSlot) return std::nullopt;
  return owners_[slot];
}

void SpectrumMap::check_range(Window window) const {
  if (window.count == 0 || window.end() > owners_.size()) {
    throw RangeError("window [" + std::to_string(window.start) + ", " + std::to_string(window.end()) +
                     ") exceeds " + std::to_string(owners_.size()) + " slots");
  }
}

void SpectrumMap::set_busy(std::size_t slot, bool busy) {
  const std::uint64_t bit = 1ULL << (slot % kWordBits);
  if (busy) {
    busy_[slot / kWordBits] |= bit;
  } else {
    busy_[slot / kWordBits] &= ~bit;
  }
}

void SpectrumMap::occupy(Window window, DemandId id) {
  if (id == kFreeSlot) throw InvalidParams("reserved demand id");
  check_range(window);
  for (std::size_t s = window.start; s < window.end(); ++s) {
    if (owners_[s] != kFreeSlot) {
      throw OverlapError("slot " + std::to_string(s) + " already owned by demand " + std::to_string(owners_[s]));
    }
  }
  for (std::size_t s = window.start; s < window.end(); ++s) {
    owners_[s] = id;
    set_busy(s, true);
  }
  occupied_ += window.count;
}

void SpectrumMap::vacate(Window window, DemandId id) {
  check_range(window);
  for (std::size_t s = window.start; s < window.end(); ++s) {
    if (owners_[s] != id) {
      throw UnknownDemand("slot " + std::to_string(s) + " is not owned by demand " + std::to_string(id));
    }
  }
  for (std::size_t s = window.start; s < window.end(); ++s) {
    owners_[s] = kFreeSlot;
    set_busy(s, false);
  }
  occupied_ -= window.count;
}

std::size_t SpectrumMap::highest_used() const {
  for (std::size_t w = busy_.size(); w-- > 0;) {
    if (busy_[w] != 0) {
      return w * kWordBits + (kWordBits - static_cast<std::size_t>(std::countl_zero(busy_[w])));
    }
  }
  return 0;
}

std::optional<std::size_t> SpectrumMap::first_fit(std::size_t count, std::size_t from) const {
  if (count == 0) return std::nullopt;
  for (std::size_t start = from; start + count <= owners_.size(); ++start) {
    if (window_free({start, count})) return start;
  }
  return std::nullopt;
}

}  // namespace hueon

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hueon {

enum class FiberKind : std::uint8_t { Ssmf = 0, Ull = 1 };

inline constexpr std::array<FiberKind, 2> kFiberKinds{FiberKind::Ssmf, FiberKind::Ull};

constexpr std::size_t index_of(FiberKind kind) { return static_cast<std::size_t>(kind); }

std::string_view to_string(FiberKind kind);

/// Parses "SSMF" / "ULL" (case-insensitive). Throws ConfigError otherwise.
FiberKind parse_fiber_kind(std::string_view text);

using DemandId = std::uint64_t;

/// Owner value stored for an unoccupied slot.
inline constexpr DemandId kFreeSlot = std::numeric_limits<DemandId>::max();

/// Half-open slot range [start, start + count).
struct Window {
  std::size_t start = 0;
  std::size_t count = 0;

  std::size_t end() const { return start + count; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Per-fiber frequency-slot occupancy.
///
/// Each slot stores the id of the lightpath that owns it. A packed busy bitmap
/// is kept in step with the owner array so window scans touch 64 slots per
/// word.
class SpectrumMap {
 public:
  explicit SpectrumMap(std::size_t total_slots = 320);

  std::size_t total_slots() const { return owners_.size(); }

  bool is_free(std::size_t slot) const;

  /// True iff every slot of the window exists and is free. Windows that run
  /// past the last slot, and empty windows, are reported as not free.
  bool window_free(Window window) const;

  std::optional<DemandId> owner(std::size_t slot) const;
  std::span<const DemandId> owners() const { return owners_; }

  /// Marks the window as owned by `id`.
  /// Throws RangeError if the window does not fit, OverlapError if any slot
  /// is taken. The map is unchanged on failure.
  void occupy(Window window, DemandId id);

  /// Frees the window. Every slot must currently belong to `id`.
  void vacate(Window window, DemandId id);

  std::size_t occupied_count() const { return occupied_; }

  /// 1-based index of the highest occupied slot; 0 when the fiber is empty.
  std::size_t highest_used() const;

  /// Lowest start slot >= `from` at which `count` consecutive slots are free.
  std::optional<std::size_t> first_fit(std::size_t count, std::size_t from = 0) const;

  friend bool operator==(const SpectrumMap& a, const SpectrumMap& b) { return a.owners_ == b.owners_; }

 private:
  void check_range(Window window) const;
  void set_busy(std::size_t slot, bool busy);

  std::vector<DemandId> owners_;
  std::vector<std::uint64_t> busy_;
  std::size_t occupied_ = 0;
};

}  // namespace hueon

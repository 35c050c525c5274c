#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hueon {

struct ModulationFormat {
  std::string name;
  double capacity_gbps = 0.0;      // per frequency slot
  double osnr_threshold_db = 0.0;  // minimum path OSNR

  friend bool operator==(const ModulationFormat&, const ModulationFormat&) = default;
};

/// Modulation formats ordered by descending spectral efficiency.
///
/// Both the per-slot capacity and the OSNR threshold must decrease strictly
/// down the list; the constructor rejects anything else.
class ModulationTable {
 public:
  explicit ModulationTable(std::vector<ModulationFormat> formats);

  /// 64-QAM 150/24.6, 32-QAM 125/21.6, 16-QAM 100/18.6, 8-QAM 75/16,
  /// QPSK 50/12, BPSK 25/9 (Gb/s per slot / dB).
  static ModulationTable standard();

  std::size_t size() const { return formats_.size(); }
  const ModulationFormat& operator[](std::size_t i) const { return formats_.at(i); }
  std::span<const ModulationFormat> formats() const { return formats_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws ConfigError

 private:
  std::vector<ModulationFormat> formats_;
};

/// ceil(bandwidth / capacity). Throws InvalidBandwidth when bandwidth <= 0.
std::size_t required_fs(double bandwidth_gbps, const ModulationFormat& format);

double db_to_linear(double db);
double linear_to_db(double linear);

/// True when `osnr_linear` reaches the format's threshold (equality admitted).
bool meets_threshold(double osnr_linear, const ModulationFormat& format);

/// Index of the highest-capacity format whose threshold is met, or nullopt
/// when even the last (most robust) format is out of reach.
std::optional<std::size_t> best_format(double osnr_db, const ModulationTable& table);
std::optional<std::size_t> best_format_linear(double osnr_linear, const ModulationTable& table);

}  // namespace hueon

#include "hueon/modulation.hpp"

#include <cmath>

#include "hueon/errors.hpp"

namespace hueon {

ModulationTable::ModulationTable(std::vector<ModulationFormat> formats) : formats_(std::move(formats)) {
  if (formats_.empty()) throw InvalidParams("modulation table is empty");
  for (std::size_t i = 0; i < formats_.size(); ++i) {
    if (!(formats_[i].capacity_gbps > 0.0)) throw InvalidParams("format capacity must be positive");
    if (i == 0) continue;
    if (!(formats_[i].capacity_gbps < formats_[i - 1].capacity_gbps) ||
        !(formats_[i].osnr_threshold_db < formats_[i - 1].osnr_threshold_db)) {
      throw InvalidParams("modulation table must be strictly decreasing in capacity and threshold at '" +
                          formats_[i].name + "'");
    }
  }
}

ModulationTable ModulationTable::standard() {
  // 16-QAM is 100 Gb/s per slot; a worked 160 Gb/s demand needs 2 slots.
  return ModulationTable({
      {"64-QAM", 150.0, 24.6},
      {"32-QAM", 125.0, 21.6},
      {"16-QAM", 100.0, 18.6},
      {"8-QAM", 75.0, 16.0},
      {"QPSK", 50.0, 12.0},
      {"BPSK", 25.0, 9.0},
  });
}

std::optional<std::size_t> ModulationTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < formats_.size(); ++i) {
    if (formats_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t ModulationTable::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ConfigError("unknown modulation format '" + std::string(name) + "'");
}

std::size_t required_fs(double bandwidth_gbps, const ModulationFormat& format) {
  if (!(bandwidth_gbps > 0.0)) throw InvalidBandwidth("bandwidth must be positive");
  return static_cast<std::size_t>(std::ceil(bandwidth_gbps / format.capacity_gbps));
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

bool meets_threshold(double osnr_linear, const ModulationFormat& format) {
  return osnr_linear >= db_to_linear(format.osnr_threshold_db);
}

std::optional<std::size_t> best_format_linear(double osnr_linear, const ModulationTable& table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (meets_threshold(osnr_linear, table[i])) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> best_format(double osnr_db, const ModulationTable& table) {
  return best_format_linear(db_to_linear(osnr_db), table);
}

}  // namespace hueon

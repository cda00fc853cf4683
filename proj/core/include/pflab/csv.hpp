#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace pflab {

/// Shortest round-trip decimal representation of a 64-bit float.
std::string format_double(double x);

using CsvValue = std::variant<double, std::int64_t, std::uint64_t, std::string>;

// CSV writer used for all persisted outputs. Every file starts with a
// metadata comment line (config hash + artifact version) followed by the
// header row.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& meta_comment,
            const std::vector<std::string>& header);
  void comment(const std::string& text);
  void row(std::span<const CsvValue> values);
  void row(std::initializer_list<CsvValue> values);
  void row_doubles(std::span<const double> values);

 private:
  std::ofstream out_;
  std::size_t n_cols_;
};

/// FNV-1a hash of the canonical config text, hex-encoded.
std::string config_hash(const std::string& text);

std::string csv_meta_line(const std::string& cfg_hash);

}  // namespace pflab

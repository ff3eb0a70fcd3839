#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace urnmax::cli {

enum class Format { table, csv, jsonl };

Format parse_format(const std::string& text);

struct OutputRecord {
  std::string quantity;
  std::string params;  // "key=value" pairs joined by ';'
  double value = 0.0;
  double error_bound = 0.0;
  std::string method;
  std::string reference;
  std::optional<std::uint64_t> seed;
};

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format);

}  // namespace urnmax::cli

#include "records.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace urnmax::cli {

Format parse_format(const std::string& text) {
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  if (text == "jsonl") return Format::jsonl;
  throw std::invalid_argument("unknown format '" + text + "' (table, csv, jsonl)");
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_table(std::ostream& out, const std::vector<OutputRecord>& records) {
  const std::array<std::string, 6> head{"quantity", "params", "value", "error_bound", "method", "reference"};
  std::vector<std::array<std::string, 6>> rows;
  for (const auto& r : records) {
    std::string ref = r.reference;
    if (r.seed) ref += (ref.empty() ? "" : " ") + std::string("seed=") + std::to_string(*r.seed);
    rows.push_back({r.quantity, r.params, format_number(r.value), format_number(r.error_bound), r.method, ref});
  }
  std::array<std::size_t, 6> width{};
  for (std::size_t i = 0; i < 6; ++i) {
    width[i] = head[i].size();
    for (const auto& row : rows) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::array<std::string, 6>& cells) {
    std::string s;
    for (std::size_t i = 0; i < 6; ++i) {
      s += cells[i];
      if (i + 1 < 6) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(head);
  for (const auto& row : rows) line(row);
}

}  // namespace

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
  switch (format) {
    case Format::table:
      write_table(out, records);
      break;
    case Format::csv:
      out << "quantity,params,value,error_bound,method,reference\n";
      for (const auto& r : records) {
        std::string ref = r.reference;
        if (r.seed) ref += (ref.empty() ? "" : " ") + std::string("seed=") + std::to_string(*r.seed);
        out << csv_field(r.quantity) << ',' << csv_field(r.params) << ',' << format_number(r.value) << ','
            << format_number(r.error_bound) << ',' << csv_field(r.method) << ',' << csv_field(ref) << '\n';
      }
      break;
    case Format::jsonl:
      for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["quantity"] = r.quantity;
        j["params"] = r.params;
        j["value"] = r.value;
        j["error_bound"] = r.error_bound;
        j["method"] = r.method;
        j["reference"] = r.reference;
        if (r.seed) j["seed"] = *r.seed;
        out << j.dump() << '\n';
      }
      break;
  }
}

}  // namespace urnmax::cli

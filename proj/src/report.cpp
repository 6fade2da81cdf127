#include "llab/report.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace llab {

std::string to_string(MethodTag tag) {
  switch (tag) {
    case MethodTag::Exact:
      return "exact";
    case MethodTag::Lower:
      return "lower";
    case MethodTag::CalibratedUpper:
      return "calibrated-upper";
    case MethodTag::Advisory:
      return "advisory";
    case MethodTag::Info:
      return "info";
  }
  return "?";
}

ReportRow& ReportRow::add(std::string key, double v, MethodTag tag) {
  cells.push_back({std::move(key), v, tag});
  return *this;
}
ReportRow& ReportRow::add(std::string key, long long v, MethodTag tag) {
  cells.push_back({std::move(key), v, tag});
  return *this;
}
ReportRow& ReportRow::add(std::string key, int v, MethodTag tag) {
  cells.push_back({std::move(key), static_cast<long long>(v), tag});
  return *this;
}
ReportRow& ReportRow::add(std::string key, bool v, MethodTag tag) {
  cells.push_back({std::move(key), v, tag});
  return *this;
}
ReportRow& ReportRow::add(std::string key, std::string v, MethodTag tag) {
  cells.push_back({std::move(key), std::move(v), tag});
  return *this;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string cell_to_string(const Cell& c) {
  if (std::holds_alternative<double>(c.value)) {
    return format_double(std::get<double>(c.value));
  }
  if (std::holds_alternative<long long>(c.value)) {
    return std::to_string(std::get<long long>(c.value));
  }
  if (std::holds_alternative<bool>(c.value)) {
    return std::get<bool>(c.value) ? "true" : "false";
  }
  return std::get<std::string>(c.value);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

bool carries_method(const Cell& c) { return c.tag != MethodTag::Info; }

}  // namespace

void write_csv(const ReportTable& table, std::ostream& os) {
  if (table.rows.empty()) return;
  const ReportRow& head = table.rows.front();
  bool first = true;
  for (const Cell& c : head.cells) {
    if (!first) os << ",";
    first = false;
    os << csv_escape(c.key);
    if (carries_method(c)) os << "," << csv_escape(c.key + "_method");
  }
  os << "\n";
  for (const ReportRow& row : table.rows) {
    if (row.cells.size() != head.cells.size()) {
      throw std::logic_error("write_csv: ragged report table");
    }
    first = true;
    for (const Cell& c : row.cells) {
      if (!first) os << ",";
      first = false;
      os << csv_escape(cell_to_string(c));
      if (carries_method(c)) os << "," << csv_escape(to_string(c.tag));
    }
    os << "\n";
  }
}

void write_jsonl(const ReportTable& table, std::ostream& os) {
  for (const ReportRow& row : table.rows) {
    nlohmann::ordered_json obj;
    for (const Cell& c : row.cells) {
      if (std::holds_alternative<double>(c.value)) {
        obj[c.key] = std::get<double>(c.value);
      } else if (std::holds_alternative<long long>(c.value)) {
        obj[c.key] = std::get<long long>(c.value);
      } else if (std::holds_alternative<bool>(c.value)) {
        obj[c.key] = std::get<bool>(c.value);
      } else {
        obj[c.key] = std::get<std::string>(c.value);
      }
      if (carries_method(c)) obj[c.key + "_method"] = to_string(c.tag);
    }
    os << obj.dump() << "\n";
  }
}

void write_table(const ReportTable& table, std::ostream& os,
                 const std::string& format) {
  if (format == "csv") {
    write_csv(table, os);
  } else if (format == "json") {
    write_jsonl(table, os);
  } else {
    throw std::invalid_argument("write_table: format must be csv or json");
  }
}

}  // namespace llab

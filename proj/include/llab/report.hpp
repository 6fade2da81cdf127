#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace llab {

// Provenance tag carried by every measured value in a report row.
enum class MethodTag { Exact, Lower, CalibratedUpper, Advisory, Info };

std::string to_string(MethodTag tag);

struct Cell {
  std::string key;
  std::variant<double, long long, bool, std::string> value;
  MethodTag tag = MethodTag::Info;
};

struct ReportRow {
  std::vector<Cell> cells;

  ReportRow& add(std::string key, double v, MethodTag tag = MethodTag::Info);
  ReportRow& add(std::string key, long long v, MethodTag tag = MethodTag::Info);
  ReportRow& add(std::string key, int v, MethodTag tag = MethodTag::Info);
  ReportRow& add(std::string key, bool v, MethodTag tag = MethodTag::Info);
  ReportRow& add(std::string key, std::string v, MethodTag tag = MethodTag::Info);
};

struct ReportTable {
  std::vector<ReportRow> rows;
};

// Pinned double formatting ("%.12g"): reports are byte-identical across runs
// with the same config and seeds.
std::string format_double(double v);

// RFC 4180: fields holding commas, quotes or newlines are quoted, embedded
// quotes doubled. Column order follows the first row; a `<key>_method`
// column follows every measured column.
void write_csv(const ReportTable& table, std::ostream& os);

// One JSON object per row, keys in column order.
void write_jsonl(const ReportTable& table, std::ostream& os);

void write_table(const ReportTable& table, std::ostream& os,
                 const std::string& format);  // "csv" or "json"

}  // namespace llab

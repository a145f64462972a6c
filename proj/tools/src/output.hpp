#pragma once

// Column tables written as CSV or JSON, plus the run manifest that goes with
// every data file.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace umbracal::cli {

enum class Format { kCsv, kJson };

Format parse_format(const std::string& name);
const char* format_name(Format format);

struct Column {
  std::string name;
  std::variant<std::vector<double>, std::vector<std::int64_t>, std::vector<std::string>> cells;

  std::size_t size() const;
};

struct Table {
  std::vector<Column> columns;

  Column& add(std::string name, std::vector<double> values);
  Column& add(std::string name, std::vector<std::int64_t> values);
  Column& add(std::string name, std::vector<std::string> values);
  /// Throws std::logic_error when columns differ in length.
  std::size_t rows() const;
};

struct RunManifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string output;  // "-" for stdout
  Format format = Format::kCsv;
  std::string version;
  std::string timestamp;
};

/// ISO-8601 UTC. SOURCE_DATE_EPOCH, when set, replaces the clock.
std::string utc_timestamp();

/// 17 significant digits; nan and inf spelled out.
std::string format_double(double v);

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table, const RunManifest& manifest);
std::string manifest_json(const RunManifest& manifest);

/// Writes to manifest.output (stdout for "-"). A CSV file gets its manifest
/// next to it as <output>.manifest.json; JSON embeds it.
void emit(const Table& table, const RunManifest& manifest);

}  // namespace umbracal::cli

#include "output.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace umbracal::cli {

using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw std::invalid_argument("unknown format: " + name);
}

const char* format_name(Format format) { return format == Format::kCsv ? "csv" : "json"; }

std::size_t Column::size() const {
  return std::visit([](const auto& v) { return v.size(); }, cells);
}

Column& Table::add(std::string name, std::vector<double> values) {
  return columns.emplace_back(Column{std::move(name), std::move(values)});
}
Column& Table::add(std::string name, std::vector<std::int64_t> values) {
  return columns.emplace_back(Column{std::move(name), std::move(values)});
}
Column& Table::add(std::string name, std::vector<std::string> values) {
  return columns.emplace_back(Column{std::move(name), std::move(values)});
}

std::size_t Table::rows() const {
  if (columns.empty()) return 0;
  const std::size_t n = columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != n) throw std::logic_error("table column '" + c.name + "' has the wrong length");
  }
  return n;
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    now = static_cast<std::time_t>(std::stoll(epoch));
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell(const Column& c, std::size_t row) {
  struct Visitor {
    std::size_t row;
    std::string operator()(const std::vector<double>& v) const { return format_double(v[row]); }
    std::string operator()(const std::vector<std::int64_t>& v) const { return std::to_string(v[row]); }
    std::string operator()(const std::vector<std::string>& v) const { return v[row]; }
  };
  return std::visit(Visitor{row}, c.cells);
}

ordered_json column_json(const Column& c) {
  ordered_json arr = ordered_json::array();
  struct Visitor {
    ordered_json& arr;
    void operator()(const std::vector<double>& v) const {
      for (double x : v) {
        if (std::isfinite(x)) {
          arr.push_back(x);
        } else {
          arr.push_back(nullptr);
        }
      }
    }
    void operator()(const std::vector<std::int64_t>& v) const {
      for (auto x : v) arr.push_back(x);
    }
    void operator()(const std::vector<std::string>& v) const {
      for (const auto& x : v) arr.push_back(x);
    }
  };
  std::visit(Visitor{arr}, c.cells);
  return arr;
}

ordered_json meta(const RunManifest& m) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : m.parameters) params[k] = v;
  return ordered_json{{"subcommand", m.subcommand}, {"parameters", params},
                      {"output", m.output},         {"format", format_name(m.format)},
                      {"version", m.version},       {"timestamp", m.timestamp}};
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  const std::size_t rows = table.rows();
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    os << (j ? "," : "") << csv_field(table.columns[j].name);
  }
  os << "\r\n";
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      os << (j ? "," : "") << csv_field(cell(table.columns[j], i));
    }
    os << "\r\n";
  }
}

void write_json(std::ostream& os, const Table& table, const RunManifest& manifest) {
  table.rows();
  ordered_json data = ordered_json::object();
  for (const auto& c : table.columns) data[c.name] = column_json(c);
  os << ordered_json{{"meta", meta(manifest)}, {"data", data}}.dump(2) << '\n';
}

std::string manifest_json(const RunManifest& manifest) { return meta(manifest).dump(2) + '\n'; }

void emit(const Table& table, const RunManifest& manifest) {
  auto write = [&](std::ostream& os) {
    if (manifest.format == Format::kCsv) {
      write_csv(os, table);
    } else {
      write_json(os, table, manifest);
    }
  };
  if (manifest.output.empty() || manifest.output == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(manifest.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + manifest.output);
  write(file);
  if (!file) throw std::runtime_error("failed writing " + manifest.output);
  if (manifest.format == Format::kCsv) {
    std::ofstream side(manifest.output + ".manifest.json", std::ios::binary);
    side << manifest_json(manifest);
    if (!side) throw std::runtime_error("failed writing manifest for " + manifest.output);
  }
}

}  // namespace umbracal::cli

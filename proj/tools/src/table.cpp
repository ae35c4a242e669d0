#include "table.hpp"

#include <json.hpp>

#include "version.hpp"

namespace dealmix::cli {
namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

void write_csv(std::ostream& out, const Table& table, const std::string& header) {
  out << "# dealmix " << kVersion << ' ' << header << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_cell(table.columns[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
  for (const auto& [key, value] : table.notes) out << "# " << key << '=' << value << '\n';
}

nlohmann::ordered_json number_or_string(const std::string& cell) {
  if (cell.empty()) return nullptr;
  if (cell == "nan" || cell == "inf" || cell == "-inf") return cell;
  auto value = nlohmann::ordered_json::parse(cell, nullptr, false);
  if (value.is_discarded()) return cell;
  return value;
}

void write_json(std::ostream& out, const Table& table, const std::string& header) {
  nlohmann::ordered_json doc;
  doc["tool"] = "dealmix";
  doc["version"] = kVersion;
  doc["config"] = header;
  doc["columns"] = table.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = table.numeric[i] ? number_or_string(row[i]) : nlohmann::ordered_json(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  auto& notes = doc["notes"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.notes) notes[key] = value;
  out << doc.dump(2) << '\n';
}

}  // namespace

void write_table(std::ostream& out, const Table& table, OutputFormat format, const std::string& header) {
  if (format == OutputFormat::kJson) {
    write_json(out, table, header);
  } else {
    write_csv(out, table, header);
  }
}

}  // namespace dealmix::cli

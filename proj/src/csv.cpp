#include "cavmech/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace cavmech {

std::string renderNumber(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string renderNumber(long long value) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string emitCsv(const CsvTable& table, const std::string& path) {
  if (table.header.empty() || table.rows.empty())
    throw std::invalid_argument("emitCsv: dataset must be nonempty");
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size())
      throw std::invalid_argument("emitCsv: row width does not match header");
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("emitCsv: cannot open '" + path + "' for writing");

  const auto writeLine = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  writeLine(table.header);
  for (const auto& row : table.rows) writeLine(row);

  out.flush();
  if (!out) throw std::runtime_error("emitCsv: write failed for '" + path + "'");
  return path;
}

}  // namespace cavmech

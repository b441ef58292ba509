#pragma once

#include <string>
#include <vector>

namespace cavmech {

/// Shortest decimal form that round-trips the exact double (std::to_chars);
/// NaN renders as "nan". Locale independent.
std::string renderNumber(double value);
std::string renderNumber(long long value);

/// In-memory dataset with a fixed column schema; cells are pre-rendered.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Writes header then rows, comma separated, '\n' line endings.
/// Throws std::invalid_argument on an empty dataset and std::runtime_error
/// when the path cannot be written.
std::string emitCsv(const CsvTable& table, const std::string& path);

}  // namespace cavmech

#include "value_csv.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace epifair::cli {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Distribution read_value_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(errc::parse_error, "empty input CSV");
  const auto header = split(line);
  int value_col = -1;
  int group_col = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "value") value_col = static_cast<int>(i);
    else if (header[i] == "group") group_col = static_cast<int>(i);
    else throw Error(errc::parse_error, "unknown column " + header[i]);
  }
  if (value_col < 0)
    throw Error(errc::parse_error, "input CSV needs a 'value' column");

  Distribution d;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size())
      throw Error(errc::parse_error,
                  "row " + std::to_string(line_no) + " has wrong width");
    try {
      d.values.push_back(std::stod(cells[static_cast<std::size_t>(value_col)]));
    } catch (const std::exception&) {
      throw Error(errc::parse_error,
                  "bad value on row " + std::to_string(line_no));
    }
    if (group_col >= 0)
      d.groups.push_back(cells[static_cast<std::size_t>(group_col)]);
  }
  d.validate();
  return d;
}

}  // namespace epifair::cli

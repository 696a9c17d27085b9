#pragma once

#include <array>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace golden {

struct Row {
  std::string name;
  std::string regex;
  std::array<bool, 8> expected{};
};

inline std::vector<Row> table1() {
  std::ifstream in(std::string(GOLDEN_DIR) + "/table1.json");
  if (!in) throw std::runtime_error("missing golden/table1.json");
  const auto j = nlohmann::json::parse(in);
  std::vector<Row> rows;
  for (const auto& r : j.at("rows")) {
    Row row{r.at("name"), r.at("regex")};
    const std::string yn = r.at("row");
    for (std::size_t i = 0; i < 8; ++i) row.expected[i] = yn.at(i) == 'Y';
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<std::string> columns() {
  std::ifstream in(std::string(GOLDEN_DIR) + "/table1.json");
  return nlohmann::json::parse(in).at("columns").get<std::vector<std::string>>();
}

}  // namespace golden

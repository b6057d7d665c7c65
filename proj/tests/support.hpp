#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kirby4/diagram.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(KIRBY4_FIXTURES) + "/" + name + ".json";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline kirby4::FramedLink fixture(const std::string& name) {
  return kirby4::parse_framed_link(read_file(fixture_path(name)));
}

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names = {
      "unknot+1", "unknot-1", "unknot+2", "unknot-2", "kinked-unknot+1", "trefoil+1", "trefoil-1",
      "trefoil-rotated+1", "figure-eight+1", "figure-eight-rotated+1", "hopf00", "hopf00-rotated",
      "hopf20", "hopf10", "hopf0-1-negative", "split-unknots+1-1", "split-unknots+1+1",
      "split-unknots+1+1-1", "hopf00-plus-unknot+1", "chain110", "trefoil+1-trefoil+1",
      "trefoil+1-unknot-1", "trefoil-1-unknot+1", "torus24-13", "borromean111", "e8-plumbing",
      "e8-plumbing-rotated"};
  return names;
}

// Fixtures whose linking matrix has determinant +-1.
inline std::vector<std::string> unimodular_fixtures() {
  std::vector<std::string> out;
  for (const auto& n : all_fixtures())
    if (n != "unknot+2" && n != "unknot-2") out.push_back(n);
  return out;
}

inline kirby4::SymIntMatrix sym(const std::vector<std::vector<long>>& rows) {
  return kirby4::SymIntMatrix(kirby4::IntMatrix::from_rows(rows));
}

}  // namespace testing

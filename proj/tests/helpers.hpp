#pragma once

#include <string>
#include <vector>

#include "lexshell/io.hpp"
#include "lexshell/labelling.hpp"
#include "lexshell/path_table.hpp"

namespace lexshell::test {

inline std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline ParsedInstance fig1() { return load_instance(fixture("fig1.json")); }
inline ParsedInstance exac() { return load_instance(fixture("exac.json")); }

inline Poset three_chain() {
  return Poset::build({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
}

inline Poset diamond() {
  return Poset::build({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
}

// Two parallel saturated chains of length 3 sharing only their endpoints.
inline Poset long_diamond() {
  return Poset::build({"0", "x1", "x2", "y1", "y2", "1"},
                      {{"0", "x1"}, {"x1", "x2"}, {"x2", "1"},
                       {"0", "y1"}, {"y1", "y2"}, {"y2", "1"}});
}

inline EdgeLabelling labelling_of(const ParsedInstance& inst, const PathTable& t) {
  return inst.labelling_for(t);
}

inline PathId path_of(const PathTable& t, const std::string& display) {
  return t.parse_path(display);
}

inline std::vector<std::string> displays(const PathTable& t, const std::vector<PathId>& ps) {
  std::vector<std::string> out;
  for (PathId p : ps) out.push_back(t.path_display(p));
  return out;
}

}  // namespace lexshell::test

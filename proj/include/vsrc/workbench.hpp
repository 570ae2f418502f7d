#pragma once

#include <string>

#include "vsrc/exact.hpp"
#include "vsrc/json_io.hpp"

namespace vsrc {

enum class Method { automatic, cactus, exact };

Method method_from_name(const std::string& name);  // throws ParseError
std::string method_name(Method m);

// One workbench run: what was asked, what was computed, and whether the
// result re-verified. Every coloring is re-verified before it is reported;
// an invalid one is an internal error, never a silent success.
struct RunRecord {
  std::string command;
  std::string input_digest;
  std::string method;
  int k = 0;
  double runtime_ms = 0;
  bool valid = false;
  Json payload;  // command-specific: coloring, violation, bounds report

  Json to_json() const;
};

// method "auto" colors via the cactus algorithm when the graph is a cactus,
// otherwise through the exact conflict-graph coloring.
RunRecord cmd_compute(const std::string& input_text, Method method,
                      const SearchBudget& budget = {});

// Verifies a coloring file against a graph; valid=false carries the witness
// shortest path and the two clashing edges in the payload.
RunRecord cmd_verify(const std::string& input_text, const std::string& coloring_text);

RunRecord cmd_bounds(const std::string& input_text, const SearchBudget& budget = {});

}  // namespace vsrc

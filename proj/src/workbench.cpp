#include "vsrc/workbench.hpp"

#include <chrono>

#include "vsrc/bounds.hpp"
#include "vsrc/cactus.hpp"

namespace vsrc {

Method method_from_name(const std::string& name) {
  if (name == "auto") return Method::automatic;
  if (name == "cactus") return Method::cactus;
  if (name == "exact") return Method::exact;
  throw ParseError("unknown method \"" + name + "\" (expected auto, cactus, or exact)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::cactus: return "cactus";
    case Method::exact: return "exact";
  }
  return "?";
}

Json RunRecord::to_json() const {
  Json j{{"command", command},
         {"input_digest", input_digest},
         {"method", method},
         {"k", k},
         {"runtime_ms", runtime_ms},
         {"valid", valid}};
  for (const auto& [key, value] : payload.items()) j[key] = value;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

RunRecord cmd_compute(const std::string& input_text, Method method, const SearchBudget& budget) {
  RunRecord record;
  record.command = "compute";
  record.input_digest = fnv1a64_hex(input_text);
  Graph g = parse_graph(input_text);
  auto start = Clock::now();

  Coloring coloring;
  if (method == Method::automatic) {
    method = cactus_decomposition(g).ok() ? Method::cactus : Method::exact;
  }
  if (method == Method::cactus) {
    auto res = color_cactus(g);  // InvalidInputError when not a cactus
    coloring = std::move(res.coloring);
  } else {
    auto res = vsrc_exact(g, budget);
    if (!res.exact) {
      throw BudgetError("exact search ran out of budget after " + std::to_string(res.nodes) +
                        " nodes; best upper bound " + std::to_string(res.k));
    }
    coloring = std::move(res.coloring);
  }
  record.method = method_name(method);
  record.k = coloring.k;
  record.runtime_ms = ms_since(start);

  auto report = verify_coloring(g, coloring);
  record.valid = report.valid;
  if (!report.valid) {
    throw InternalError("computed coloring failed re-verification");
  }
  record.payload["coloring"] = coloring_to_json(g, coloring);
  return record;
}

RunRecord cmd_verify(const std::string& input_text, const std::string& coloring_text) {
  RunRecord record;
  record.command = "verify";
  record.input_digest = fnv1a64_hex(input_text);
  Graph g = parse_graph(input_text);
  Coloring c = parse_coloring(g, coloring_text);
  auto start = Clock::now();
  auto report = verify_coloring(g, c);
  record.runtime_ms = ms_since(start);
  record.method = "verify";
  record.k = c.k;
  record.valid = report.valid;
  record.payload = verification_to_json(g, report);
  return record;
}

RunRecord cmd_bounds(const std::string& input_text, const SearchBudget& budget) {
  RunRecord record;
  record.command = "bounds";
  record.input_digest = fnv1a64_hex(input_text);
  Graph g = parse_graph(input_text);
  auto start = Clock::now();
  auto report = vsrc_bounds(g, budget);
  record.runtime_ms = ms_since(start);
  record.method = "bounds";
  record.k = report.upper;
  record.valid = true;  // every reported upper bound re-verified inside vsrc_bounds
  record.payload["report"] = bounds_to_json(g, report);
  return record;
}

}  // namespace vsrc

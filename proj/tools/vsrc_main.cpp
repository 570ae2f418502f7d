// vsrc: workbench for very strong rainbow colorings.
//
// Subcommands: compute, verify, bounds, generate, reduce, experiment.
// Exit codes: 0 ok, 1 semantic failure, 2 parse error, 3 budget exhausted,
// 4 internal assertion.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vsrc/experiments.hpp"
#include "vsrc/instances.hpp"
#include "vsrc/workbench.hpp"

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vsrc::ParseError("cannot open file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_record(const vsrc::RunRecord& record, bool json) {
  if (json) {
    std::cout << record.to_json().dump(2) << "\n";
    return;
  }
  std::cout << "command: " << record.command << "\n"
            << "input_digest: " << record.input_digest << "\n"
            << "method: " << record.method << "\n"
            << "k: " << record.k << "\n"
            << "valid: " << (record.valid ? "true" : "false") << "\n"
            << "runtime_ms: " << record.runtime_ms << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"workbench for very strong rainbow colorings"};
  app.require_subcommand(1);

  vsrc::SearchBudget budget;
  bool json = false;

  // compute
  auto* compute = app.add_subcommand("compute", "color a graph and report k");
  std::string compute_input, compute_method = "auto";
  compute->add_option("--input", compute_input, "edge-list file (- for stdin)")->required();
  compute->add_option("--method", compute_method, "auto|cactus|exact")
      ->check(CLI::IsMember({"auto", "cactus", "exact"}));
  compute->add_option("--budget", budget.max_nodes, "search node budget");
  compute->add_flag("--json", json, "JSON output");

  // verify
  auto* verify = app.add_subcommand("verify", "check a coloring file against a graph");
  std::string verify_input, verify_coloring;
  verify->add_option("--input", verify_input, "edge-list file (- for stdin)")->required();
  verify->add_option("--coloring", verify_coloring, "coloring JSON file")->required();
  verify->add_flag("--json", json, "JSON output");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "certified lower and upper bounds");
  std::string bounds_input;
  bounds->add_option("--input", bounds_input, "edge-list file (- for stdin)")->required();
  bounds->add_option("--budget", budget.max_nodes, "search node budget");
  bounds->add_flag("--json", json, "JSON output");

  // generate
  auto* generate = app.add_subcommand("generate", "emit an instance as an edge list");
  std::string gen_family, gen_spec_file;
  vsrc::GenSpec spec;
  bool seed_given = false;
  generate->add_option("--family", gen_family,
                       "path|cycle|star|complete|complete_bipartite|random_cactus|"
                       "random_interval|random_connected");
  generate->add_option("--spec", gen_spec_file, "generator spec as JSON file");
  generate->add_option("--n", spec.n, "vertex count");
  generate->add_option("--a", spec.a, "left side size (complete_bipartite)");
  generate->add_option("--b", spec.b, "right side size (complete_bipartite)");
  generate->add_option("--blocks", spec.blocks, "block count (random_cactus)");
  generate->add_option("--max-len", spec.max_len, "largest cycle length (random_cactus)");
  generate->add_option("--p", spec.p, "edge probability (random_connected)");
  generate->add_option("--seed", spec.seed, "PRNG seed (required for random families)")
      ->each([&](const std::string&) { seed_given = true; });
  generate->add_flag("--json", json, "echo the spec as JSON on stderr");

  // reduce
  auto* reduce = app.add_subcommand(
      "reduce", "3-colorability gadget: universal vertex over the complement");
  std::string reduce_input;
  reduce->add_option("--input", reduce_input, "edge-list file (- for stdin)")->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "run a named acceptance suite");
  std::string suite;
  int seeds = 100, max_m = 18, max_n = 8;
  std::uint64_t base_seed = 0;
  bool exp_seed_given = false;
  experiment->add_option("--suite", suite, "cactus-vs-exact|conflict-oracle|reduction")
      ->required()
      ->check(CLI::IsMember({"cactus-vs-exact", "conflict-oracle", "reduction"}));
  experiment->add_option("--seeds", seeds, "number of instances");
  experiment->add_option("--seed", base_seed, "base PRNG seed (required)")
      ->each([&](const std::string&) { exp_seed_given = true; });
  experiment->add_option("--max-m", max_m, "edge bound (cactus-vs-exact)");
  experiment->add_option("--max-n", max_n, "vertex bound (conflict-oracle, reduction)");
  experiment->add_option("--budget", budget.max_nodes, "search node budget");
  experiment->add_flag("--json", json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  if (*compute) {
    auto record = vsrc::cmd_compute(read_file(compute_input),
                                    vsrc::method_from_name(compute_method), budget);
    print_record(record, json);
    if (!json) std::cout << record.payload["coloring"].dump(2) << "\n";
    return 0;
  }

  if (*verify) {
    auto record = vsrc::cmd_verify(read_file(verify_input), read_file(verify_coloring));
    print_record(record, json);
    if (!record.valid && !json) {
      const auto& viol = record.payload["violation"];
      std::cout << "violating shortest path:";
      for (const auto& v : viol["path"]) std::cout << " " << v;
      std::cout << "\nedges " << viol["edges"][0].get<std::string>() << " and "
                << viol["edges"][1].get<std::string>() << " share a color\n";
    }
    return record.valid ? 0 : 1;
  }

  if (*bounds) {
    auto record = vsrc::cmd_bounds(read_file(bounds_input), budget);
    if (json) {
      std::cout << record.to_json().dump(2) << "\n";
    } else {
      const auto& rep = record.payload["report"];
      std::cout << "lower: " << rep["lower"]["value"] << " (diameter "
                << rep["lower"]["diameter"] << ", bridges " << rep["lower"]["bridges"]
                << ", groupable " << rep["lower"]["groupable"] << ", conflict clique "
                << rep["lower"]["conflict_clique"] << ")\n";
      std::cout << "upper: " << rep["upper"]["value"] << " via "
                << rep["upper"]["method"].get<std::string>() << "\n";
    }
    return 0;
  }

  if (*generate) {
    if (!gen_spec_file.empty()) {
      auto j = vsrc::Json::parse(read_file(gen_spec_file), nullptr, false);
      if (j.is_discarded()) throw vsrc::ParseError("spec file is not valid JSON");
      spec = vsrc::genspec_from_json(j);
    } else if (!gen_family.empty()) {
      spec.family = vsrc::family_from_name(gen_family);
    } else {
      throw vsrc::ParseError("generate needs --family or --spec");
    }
    bool randomized = spec.family == vsrc::Family::random_cactus ||
                      spec.family == vsrc::Family::random_interval ||
                      spec.family == vsrc::Family::random_connected;
    if (randomized && !seed_given && gen_spec_file.empty()) {
      throw vsrc::ParseError("random families require an explicit --seed");
    }
    auto g = vsrc::generate(spec);
    std::cout << vsrc::format_edge_list(g);
    if (json) std::cerr << vsrc::genspec_to_json(spec).dump(2) << "\n";
    return 0;
  }

  if (*reduce) {
    auto g = vsrc::parse_graph(read_file(reduce_input));
    std::cout << vsrc::format_edge_list(vsrc::reduce_3col(g.as_edge_list()));
    return 0;
  }

  if (*experiment) {
    if (!exp_seed_given) throw vsrc::ParseError("experiment requires an explicit --seed");
    vsrc::ExperimentResult result;
    if (suite == "cactus-vs-exact") {
      result = vsrc::run_cactus_vs_exact(seeds, base_seed, max_m, budget);
    } else if (suite == "conflict-oracle") {
      result = vsrc::run_conflict_oracle(seeds, base_seed, max_n);
    } else {
      result = vsrc::run_reduction(seeds, base_seed, max_n, budget);
    }
    if (json) {
      vsrc::Json rows = vsrc::Json::array();
      for (const auto& row : result.rows) {
        rows.push_back({{"label", row.label}, {"pass", row.pass}, {"detail", row.detail}});
      }
      std::cout << vsrc::Json{{"suite", result.suite},
                              {"all_pass", result.all_pass()},
                              {"rows", rows}}
                       .dump(2)
                << "\n";
    } else {
      for (const auto& row : result.rows) {
        std::cout << (row.pass ? "pass  " : "FAIL  ") << row.label << "  " << row.detail << "\n";
      }
      std::cout << result.suite << ": " << (result.all_pass() ? "all rows pass" : "FAILURES")
                << "\n";
    }
    return result.all_pass() ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const vsrc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(vsrc::ExitCode::internal);
  }
}

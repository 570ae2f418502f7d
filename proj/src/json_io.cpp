#include "vsrc/json_io.hpp"

#include <algorithm>

namespace vsrc {

namespace {

std::pair<int, int> parse_edge_key(const std::string& key) {
  auto dash = key.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= key.size()) {
    throw ParseError("bad edge key \"" + key + "\": expected \"<u>-<v>\"");
  }
  try {
    int u = std::stoi(key.substr(0, dash));
    int v = std::stoi(key.substr(dash + 1));
    return {u, v};
  } catch (const std::exception&) {
    throw ParseError("bad edge key \"" + key + "\": expected \"<u>-<v>\"");
  }
}

}  // namespace

Json coloring_to_json(const Graph& g, const Coloring& c) {
  Json colors = Json::object();
  for (int e = 0; e < g.edge_count(); ++e) colors[g.edge_name(e)] = c.color[e];
  return Json{{"k", c.k}, {"colors", colors}};
}

Coloring coloring_from_json(const Graph& g, const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("colors") || !j["colors"].is_object()) {
    throw ParseError("coloring JSON must be {\"k\": int, \"colors\": {\"u-v\": int}}");
  }
  Coloring c;
  c.k = j["k"].get<int>();
  c.color.assign(g.edge_count(), -1);
  for (const auto& [key, value] : j["colors"].items()) {
    auto [u, v] = parse_edge_key(key);
    int e = g.edge_id(u, v);
    if (e < 0) {
      throw ParseError("coloring mentions \"" + key + "\", which is not an edge of the graph");
    }
    if (c.color[e] >= 0) throw ParseError("coloring assigns edge \"" + key + "\" twice");
    if (!value.is_number_integer()) throw ParseError("color of \"" + key + "\" is not an integer");
    c.color[e] = value.get<int>();
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (c.color[e] < 0) {
      throw ParseError(ParseError::Kind::incomplete_coloring,
                       "coloring is missing edge " + g.edge_name(e));
    }
    if (c.color[e] >= c.k) {
      throw ParseError("edge " + g.edge_name(e) + " has color " + std::to_string(c.color[e]) +
                       " but k = " + std::to_string(c.k));
    }
  }
  std::vector<char> seen(c.k, 0);
  int distinct = 0;
  for (int col : c.color) {
    if (!seen[col]) {
      seen[col] = 1;
      ++distinct;
    }
  }
  if (distinct != c.k && g.edge_count() > 0) {
    throw ParseError("coloring declares k = " + std::to_string(c.k) + " but uses " +
                     std::to_string(distinct) + " distinct colors");
  }
  return c;
}

Coloring parse_coloring(const Graph& g, const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("coloring file is not valid JSON");
  return coloring_from_json(g, j);
}

Json verification_to_json(const Graph& g, const VerificationReport& report) {
  Json j{{"valid", report.valid}};
  if (report.violation) {
    j["violation"] = Json{{"path", report.violation->path},
                          {"edges", Json::array({g.edge_name(report.violation->edge1),
                                                 g.edge_name(report.violation->edge2)})}};
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

Json intersection_rep_to_json(const IntersectionRep& rep) {
  Json sets = Json::object();
  for (size_t v = 0; v < rep.sets.size(); ++v) {
    Json labels = Json::array();
    for (int x : rep.sets[v]) labels.push_back(rep.universe[x]);
    sets[std::to_string(v)] = labels;
  }
  return Json{{"universe", rep.universe}, {"sets", sets}};
}

IntersectionRep intersection_rep_from_json(const Json& j, int n) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("sets")) {
    throw ParseError("representation JSON must be {\"universe\": [...], \"sets\": {...}}");
  }
  IntersectionRep rep;
  for (const auto& label : j["universe"]) rep.universe.push_back(label.get<std::string>());
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < rep.universe.size(); ++i) {
    if (!index.emplace(rep.universe[i], static_cast<int>(i)).second) {
      throw ParseError("universe label \"" + rep.universe[i] + "\" repeats");
    }
  }
  rep.sets.resize(n);
  for (const auto& [key, labels] : j["sets"].items()) {
    int v = -1;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
    }
    if (v < 0 || v >= n) throw ParseError("set key \"" + key + "\" is not a vertex");
    for (const auto& label : labels) {
      auto it = index.find(label.get<std::string>());
      if (it == index.end()) {
        throw ParseError("set of vertex " + key + " uses unknown label \"" +
                         label.get<std::string>() + "\"");
      }
      rep.sets[v].push_back(it->second);
    }
    std::sort(rep.sets[v].begin(), rep.sets[v].end());
    rep.sets[v].erase(std::unique(rep.sets[v].begin(), rep.sets[v].end()), rep.sets[v].end());
  }
  return rep;
}

Json clique_partition_to_json(const CliquePartition& p) { return Json{{"parts", p.parts}}; }

CliquePartition clique_partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array()) {
    throw ParseError("partition JSON must be {\"parts\": [[v, ...], ...]}");
  }
  CliquePartition p;
  for (const auto& part : j["parts"]) {
    p.parts.emplace_back();
    for (const auto& v : part) p.parts.back().push_back(v.get<int>());
  }
  return p;
}

Json bounds_to_json(const Graph& g, const BoundsReport& report) {
  Json lower{{"value", report.lower.value},
             {"diameter", report.lower.diameter},
             {"bridges", report.lower.bridges},
             {"groupable", report.lower.groupable},
             {"conflict_clique", report.lower.conflict_clique}};
  if (report.lower.groupable_vertex >= 0) {
    lower["groupable_vertex"] = report.lower.groupable_vertex;
  }
  Json clique_edges = Json::array();
  for (int e : report.lower.conflict_clique_edges) clique_edges.push_back(g.edge_name(e));
  lower["conflict_clique_edges"] = clique_edges;

  Json candidates = Json::array();
  for (const auto& cand : report.upper_candidates) {
    candidates.push_back(Json{{"method", cand.method},
                              {"k", cand.k},
                              {"coloring", coloring_to_json(g, cand.coloring)}});
  }
  return Json{{"lower", lower},
              {"upper", Json{{"value", report.upper},
                             {"method", report.upper_method},
                             {"candidates", candidates}}}};
}

Json genspec_to_json(const GenSpec& spec) {
  Json j{{"family", family_name(spec.family)}, {"seed", spec.seed}};
  switch (spec.family) {
    case Family::path:
    case Family::cycle:
    case Family::star:
    case Family::complete:
    case Family::random_interval:
      j["n"] = spec.n;
      break;
    case Family::complete_bipartite:
      j["a"] = spec.a;
      j["b"] = spec.b;
      break;
    case Family::random_cactus:
      j["blocks"] = spec.blocks;
      j["max_len"] = spec.max_len;
      break;
    case Family::random_connected:
      j["n"] = spec.n;
      j["p"] = spec.p;
      break;
  }
  return j;
}

GenSpec genspec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family")) {
    throw ParseError("generator spec JSON needs a \"family\" field");
  }
  GenSpec spec;
  spec.family = family_from_name(j["family"].get<std::string>());
  if (j.contains("n")) spec.n = j["n"].get<int>();
  if (j.contains("a")) spec.a = j["a"].get<int>();
  if (j.contains("b")) spec.b = j["b"].get<int>();
  if (j.contains("blocks")) spec.blocks = j["blocks"].get<int>();
  if (j.contains("max_len")) spec.max_len = j["max_len"].get<int>();
  if (j.contains("p")) spec.p = j["p"].get<double>();
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  return spec;
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 0x100000001B3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace vsrc

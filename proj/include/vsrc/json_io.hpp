#pragma once

#include <string>

#include "json.hpp"
#include "vsrc/bounds.hpp"
#include "vsrc/conflict.hpp"
#include "vsrc/graph.hpp"
#include "vsrc/instances.hpp"

namespace vsrc {

using Json = nlohmann::json;

// Coloring JSON: {"k": int, "colors": {"<u>-<v>": int}}.
Json coloring_to_json(const Graph& g, const Coloring& c);
Coloring coloring_from_json(const Graph& g, const Json& j);
Coloring parse_coloring(const Graph& g, const std::string& text);

Json verification_to_json(const Graph& g, const VerificationReport& report);

// IntersectionRep JSON: {"universe": [labels], "sets": {"<v>": [labels]}}.
Json intersection_rep_to_json(const IntersectionRep& rep);
IntersectionRep intersection_rep_from_json(const Json& j, int n);

// CliquePartition JSON: {"parts": [[v, ...], ...]}.
Json clique_partition_to_json(const CliquePartition& p);
CliquePartition clique_partition_from_json(const Json& j);

Json bounds_to_json(const Graph& g, const BoundsReport& report);

Json genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(const Json& j);

// FNV-1a 64-bit digest as a hex string; used to fingerprint input files.
std::string fnv1a64_hex(const std::string& data);

}  // namespace vsrc

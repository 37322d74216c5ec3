#pragma once

// JSON (de)serialization of instances, graphs and certificates, and DOT output.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyresolve/graph.hpp"
#include "polyresolve/odd_cover.hpp"
#include "polyresolve/oracles.hpp"
#include "polyresolve/permutation.hpp"
#include "polyresolve/polycycle.hpp"
#include "polyresolve/resolve.hpp"

namespace polyresolve {

using Json = nlohmann::json;

// All parse functions throw Error(InvalidInput) on malformed input, naming the
// offending field.

struct Instance {
  Partition p;
  Partition q;
  std::optional<int> bound;                 // lower-bound instances only
  std::optional<LowerBoundFamily> family;   // lower-bound instances only
  bool operator==(const Instance&) const = default;
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);
Instance instance_from_lower_bound(const LowerBoundInstance& lb);

Json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);

Json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const Json& j);

Json resolution_to_json(const std::vector<CycleSeq>& taus);
std::vector<CycleSeq> resolution_from_json(const Json& j);

Json odd_cover_to_json(const OddCoverCert& cert);
OddCoverCert odd_cover_from_json(const Json& j);

Json linear_forests_to_json(const std::vector<EdgeSet>& parts);
std::vector<EdgeSet> linear_forests_from_json(const Json& j);

Json decomposition_to_json(const DirectedDecomposition& d);
DirectedDecomposition decomposition_from_json(const Json& j);

Json report_to_json(const Report& r);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// DOT renderings.  Loops of a digraph are drawn only with show_loops.
std::string emit_dot(const Digraph& g, bool show_loops);
std::string emit_dot(const SimpleGraph& g);
// Each part gets its own color and style.
std::string emit_dot(const SimpleGraph& g, const std::vector<EdgeSet>& parts);

}  // namespace polyresolve

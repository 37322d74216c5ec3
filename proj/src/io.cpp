#include "polyresolve/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "polyresolve/error.hpp"

namespace polyresolve {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidInput, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad("field \"" + what + "\" must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) bad("field \"" + what + "\" must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

Edge edge_from(const Json& j, const std::string& what) {
  const auto uv = int_list(j, what);
  if (uv.size() != 2) bad("field \"" + what + "\" must hold [u,v] pairs");
  if (uv[0] == uv[1]) bad("field \"" + what + "\" contains a loop");
  if (uv[0] < 0 || uv[1] < 0) bad("field \"" + what + "\" contains a negative vertex");
  return Edge(uv[0], uv[1]);
}

Json edges_to_json(const EdgeSet& es) {
  Json arr = Json::array();
  for (const Edge& e : es) arr.push_back({e.u, e.v});
  return arr;
}

EdgeSet edges_from(const Json& j, const std::string& what) {
  if (!j.is_array()) bad("field \"" + what + "\" must be an array");
  std::vector<Edge> es;
  for (const auto& e : j) es.push_back(edge_from(e, what));
  EdgeSet set = make_edge_set(es);
  if (set.size() != es.size()) bad("field \"" + what + "\" repeats an edge");
  return set;
}

std::vector<EdgeSet> parts_from(const Json& j) {
  const Json& parts = field(j, "parts");
  if (!parts.is_array()) bad("field \"parts\" must be an array");
  std::vector<EdgeSet> out;
  for (const auto& part : parts) out.push_back(edges_from(part, "parts"));
  return out;
}

void expect_type(const Json& j, const char* type) {
  const Json& t = field(j, "type");
  if (!t.is_string() || t.get<std::string>() != type) bad(std::string("field \"type\" must be \"") + type + "\"");
}

Partition partition_from(int n, const std::vector<int>& assign, const char* name) {
  for (int c : assign) {
    if (c < 0 || c >= n) bad(std::string("field \"") + name + "\" has a cluster outside 0..n-1");
  }
  return Partition(n, assign);
}

}  // namespace

Json instance_to_json(const Instance& inst) {
  Json j{{"m", inst.p.m()}, {"n", inst.p.n()}, {"p", inst.p.assignment()}, {"p_prime", inst.q.assignment()}};
  if (inst.bound) j["bound"] = *inst.bound;
  if (inst.family) j["family"] = family_name(*inst.family);
  return j;
}

Instance instance_from_json(const Json& j) {
  const int m = as_int(field(j, "m"), "m");
  const int n = as_int(field(j, "n"), "n");
  if (m < 0 || n < 1) bad("fields \"m\" and \"n\" must be non-negative and positive");
  const auto p = int_list(field(j, "p"), "p");
  const auto q = int_list(field(j, "p_prime"), "p_prime");
  if (static_cast<int>(p.size()) != m) bad("field \"p\" must have m entries");
  if (static_cast<int>(q.size()) != m) bad("field \"p_prime\" must have m entries");
  Instance inst{partition_from(n, p, "p"), partition_from(n, q, "p_prime"), std::nullopt, std::nullopt};
  if (j.contains("bound")) inst.bound = as_int(j["bound"], "bound");
  if (j.contains("family")) {
    const Json& f = j["family"];
    if (f == "even2cycles") {
      inst.family = LowerBoundFamily::Even2Cycles;
    } else if (f == "odd2cycles3cycle") {
      inst.family = LowerBoundFamily::Odd2Cycles3Cycle;
    } else {
      bad("field \"family\" must be \"even2cycles\" or \"odd2cycles3cycle\"");
    }
  }
  return inst;
}

Instance instance_from_lower_bound(const LowerBoundInstance& lb) { return {lb.p, lb.q, lb.bound, lb.family}; }

Json graph_to_json(const SimpleGraph& g) { return {{"n", g.n()}, {"edges", edges_to_json(g.edges())}}; }

SimpleGraph graph_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) bad("field \"n\" must be non-negative");
  const EdgeSet es = edges_from(field(j, "edges"), "edges");
  for (const Edge& e : es) {
    if (e.v >= n) bad("field \"edges\" has a vertex outside 0..n-1");
  }
  return SimpleGraph(n, es, true);
}

Json digraph_to_json(const Digraph& g) {
  Json arcs = Json::array();
  for (int e = 0; e < g.m(); ++e) arcs.push_back({g.tail(e), g.head(e)});
  return {{"n", g.n()}, {"arcs", arcs}};
}

Digraph digraph_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const Json& arcs = field(j, "arcs");
  if (!arcs.is_array()) bad("field \"arcs\" must be an array");
  std::vector<int> tail, head;
  for (const auto& a : arcs) {
    const auto th = int_list(a, "arcs");
    if (th.size() != 2) bad("field \"arcs\" must hold [tail,head] pairs");
    if (th[0] < 0 || th[0] >= n || th[1] < 0 || th[1] >= n) bad("field \"arcs\" has a vertex outside 0..n-1");
    tail.push_back(th[0]);
    head.push_back(th[1]);
  }
  return Digraph(n, tail, head);
}

Json resolution_to_json(const std::vector<CycleSeq>& taus) {
  Json arr = Json::array();
  for (const auto& t : taus) arr.push_back(t);
  return {{"type", "resolution"}, {"taus", arr}};
}

std::vector<CycleSeq> resolution_from_json(const Json& j) {
  expect_type(j, "resolution");
  const Json& taus = field(j, "taus");
  if (!taus.is_array()) bad("field \"taus\" must be an array");
  std::vector<CycleSeq> out;
  for (const auto& t : taus) out.push_back(int_list(t, "taus"));
  return out;
}

Json odd_cover_to_json(const OddCoverCert& cert) {
  if (cert.kind == PartKind::LinearForest) return linear_forests_to_json(cert.parts);
  Json parts = Json::array();
  for (const auto& p : cert.parts) parts.push_back(edges_to_json(p));
  return {{"type", "odd_cover"}, {"kind", part_kind_name(cert.kind)}, {"parts", parts}};
}

OddCoverCert odd_cover_from_json(const Json& j) {
  expect_type(j, "odd_cover");
  const Json& kind = field(j, "kind");
  OddCoverCert cert;
  if (kind == "path") {
    cert.kind = PartKind::Path;
  } else if (kind == "cycle") {
    cert.kind = PartKind::Cycle;
  } else {
    bad("field \"kind\" must be \"path\" or \"cycle\"");
  }
  cert.parts = parts_from(j);
  return cert;
}

Json linear_forests_to_json(const std::vector<EdgeSet>& parts) {
  Json arr = Json::array();
  for (const auto& p : parts) arr.push_back(edges_to_json(p));
  return {{"type", "linear_forest_decomposition"}, {"parts", arr}};
}

std::vector<EdgeSet> linear_forests_from_json(const Json& j) {
  expect_type(j, "linear_forest_decomposition");
  return parts_from(j);
}

Json decomposition_to_json(const DirectedDecomposition& d) {
  return {{"parts", d.parts}, {"cycle_suffix_len", d.cycle_suffix_len}};
}

DirectedDecomposition decomposition_from_json(const Json& j) {
  DirectedDecomposition d;
  const Json& parts = field(j, "parts");
  if (!parts.is_array()) bad("field \"parts\" must be an array");
  for (const auto& p : parts) d.parts.push_back(int_list(p, "parts"));
  d.cycle_suffix_len = as_int(field(j, "cycle_suffix_len"), "cycle_suffix_len");
  return d;
}

Json report_to_json(const Report& r) {
  return {{"check", r.check}, {"pass", r.pass}, {"detail", r.detail}, {"elapsed_ms", r.elapsed_ms}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) bad("cannot write \"" + path + "\"");
  out << text;
}

std::string emit_dot(const Digraph& g, bool show_loops) {
  std::ostringstream os;
  os << "digraph cdg {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (int e = 0; e < g.m(); ++e) {
    if (g.is_loop(e) && !show_loops) continue;
    os << "  " << g.tail(e) << " -> " << g.head(e) << " [label=\"" << e << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_dot(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph g {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_dot(const SimpleGraph& g, const std::vector<EdgeSet>& parts) {
  static constexpr std::array<const char*, 8> kColors{"black", "red", "blue", "darkgreen",
                                                      "orange", "purple", "brown", "cyan"};
  static constexpr std::array<const char*, 3> kStyles{"solid", "dashed", "dotted"};
  std::ostringstream os;
  os << "graph cover {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    os << "  subgraph part" << i << " {\n";
    os << "    edge [color=" << kColors[i % kColors.size()] << ", style=" << kStyles[(i / kColors.size()) % 3]
       << "];\n";
    for (const Edge& e : parts[i]) os << "    " << e.u << " -- " << e.v << ";\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace polyresolve

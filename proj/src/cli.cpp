#include "polyresolve/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "polyresolve/acceptance.hpp"
#include "polyresolve/error.hpp"
#include "polyresolve/instances.hpp"
#include "polyresolve/io.hpp"
#include "polyresolve/odd_cover.hpp"
#include "polyresolve/oracles.hpp"
#include "polyresolve/resolve.hpp"

namespace polyresolve {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string instance;
  std::string graph;
  std::string shape;
  std::string kind = "path";
  std::string cert;
  std::string family = "random";
  std::string out;
  std::string dot;
  std::string criteria;
  bool exact = false;
  bool show_loops = false;
  std::optional<int> bound;
  std::uint64_t seed = 1;
  std::optional<long long> cap;
  int vertices = 10;
  int delta = 4;
};

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, std::string(flag) + ": \"" + text + "\" is not a comma-separated integer list");
    }
  }
  if (out.empty()) throw Error(Errc::InvalidInput, std::string(flag) + " is empty");
  return out;
}

std::vector<int> parse_shape(const std::string& text) {
  auto shape = parse_int_list(text, "--shape");
  for (int k : shape) {
    if (k < 0) throw Error(Errc::InvalidInput, "--shape: cluster sizes must be non-negative");
  }
  return shape;
}

CoverKind parse_kind(const std::string& kind) {
  if (kind == "path") return CoverKind::Path;
  if (kind == "cycle") return CoverKind::Cycle;
  throw Error(Errc::InvalidInput, "--kind must be path or cycle");
}

// Writes JSON to --out or stdout.
void emit(const Options& o, const Json& j, std::ostream& out) {
  if (o.out.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_text_file(o.out, j.dump(2) + "\n");
  }
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(Errc::InvalidInput, std::string(flag) + " is required");
}

int cmd_resolve(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.instance, "--instance");
  const Instance inst = instance_from_json(read_json_file(o.instance));
  const Resolution r = resolve(inst.p, inst.q);
  const Report rep = verify_certificate(inst.p, inst.q, r.taus);
  if (!o.dot.empty()) write_text_file(o.dot, emit_dot(cdg(inst.p, inst.q), o.show_loops));
  if (!rep.pass) {
    err << "certificate failed verification: " << rep.detail << "\n";
    return kVerifyFailed;
  }
  emit(o, resolution_to_json(r.taus), out);
  if (!o.out.empty()) {
    out << "length " << r.taus.size() << " (bound " << resolution_length_bound(inst.p) << ")\n";
  }
  return kOk;
}

int cmd_oddcover(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.graph, "--graph");
  const SimpleGraph g = graph_from_json(read_json_file(o.graph));
  const CoverKind kind = parse_kind(o.kind);
  OddCoverCert cert;
  if (is_eulerian(g)) {
    cert = odd_cover_eulerian(g, kind);
  } else if (kind == CoverKind::Path) {
    cert = path_odd_cover_general(g);
  } else {
    throw Error(Errc::NotEulerian, "cycle odd-covers need an Eulerian graph");
  }
  const Report rep = verify_certificate(g, cert);
  if (!rep.pass) {
    err << "certificate failed verification: " << rep.detail << "\n";
    return kVerifyFailed;
  }
  if (!o.dot.empty()) write_text_file(o.dot, emit_dot(g, cert.parts));
  emit(o, odd_cover_to_json(cert), out);
  if (!o.out.empty()) out << cert.parts.size() << " " << part_kind_name(cert.kind) << " parts\n";
  return kOk;
}

int cmd_arboricity(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.graph, "--graph");
  const SimpleGraph g = graph_from_json(read_json_file(o.graph));
  const auto forests = linear_forest_decomposition(g);
  const Report rep = verify_certificate(g, forests);
  if (!rep.pass) {
    err << "certificate failed verification: " << rep.detail << "\n";
    return kVerifyFailed;
  }
  if (!o.dot.empty()) write_text_file(o.dot, emit_dot(g, forests));
  emit(o, linear_forests_to_json(forests), out);
  if (!o.out.empty()) out << forests.size() << " linear forests\n";
  return kOk;
}

int cmd_diameter(const Options& o, std::ostream& out) {
  require(o.shape, "--shape");
  auto shape = parse_shape(o.shape);
  if (o.exact) {
    out << exact_diameter_bfs(shape, o.cap.value_or(default_cap())) << "\n";
    return kOk;
  }
  std::sort(shape.rbegin(), shape.rend());
  const int k1 = shape.empty() ? 0 : shape[0];
  const int k2 = shape.size() >= 2 ? shape[1] : 0;
  Json j{{"upper", k1 + (k2 + 1) / 2}, {"lower", nullptr}};
  if (shape.size() >= 4) j["lower"] = lower_bound_formula(shape);
  out << j.dump() << "\n";
  return kOk;
}

int cmd_lowerbound(const Options& o, std::ostream& out) {
  if (!o.shape.empty()) {
    const LowerBoundInstance lb = gen_lower_bound_instance(parse_shape(o.shape));
    if (!o.dot.empty()) write_text_file(o.dot, emit_dot(cdg(lb.p, lb.q), o.show_loops));
    emit(o, instance_to_json(instance_from_lower_bound(lb)), out);
    return kOk;
  }
  require(o.instance, "--instance or --shape");
  const Instance inst = instance_from_json(read_json_file(o.instance));
  const ProgressBound pb = progress_lower_bound(inst.p, inst.q);
  Json j{{"progress_bound", pb.value}, {"gain_cap", pb.gain_cap}, {"family_specific", pb.family_specific}};
  if (o.bound) {
    const PrunedSearchResult s = pruned_search(inst.p, inst.q, *o.bound, true);
    j["pruned_search"] = {{"L", *o.bound},
                          {"no_short_resolution", s.no_short_resolution},
                          {"states", s.nodes},
                          {"first_step_fixed", s.first_step_fixed}};
    if (!s.no_short_resolution) j["pruned_search"]["witness"] = resolution_to_json(s.witness);
  }
  emit(o, j, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require(o.cert, "--cert");
  const Json cert = read_json_file(o.cert);
  if (!cert.is_object() || !cert.contains("type") || !cert["type"].is_string()) {
    throw Error(Errc::InvalidInput, "--cert: missing field \"type\"");
  }
  const std::string type = cert["type"];
  Report rep;
  if (type == "resolution") {
    require(o.instance, "--instance");
    const Instance inst = instance_from_json(read_json_file(o.instance));
    rep = verify_certificate(inst.p, inst.q, resolution_from_json(cert));
  } else if (type == "odd_cover") {
    require(o.graph, "--graph");
    rep = verify_certificate(graph_from_json(read_json_file(o.graph)), odd_cover_from_json(cert));
  } else if (type == "linear_forest_decomposition") {
    require(o.graph, "--graph");
    rep = verify_certificate(graph_from_json(read_json_file(o.graph)), linear_forests_from_json(cert));
  } else {
    throw Error(Errc::InvalidInput, "--cert: unknown certificate type \"" + type + "\"");
  }
  emit(o, report_to_json(rep), out);
  return rep.pass ? kOk : kVerifyFailed;
}

int cmd_gen(const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  Json j;
  if (o.family == "random") {
    const auto [p, q] = o.shape.empty() ? random_instance(rng) : random_instance_with_shape(rng, parse_shape(o.shape));
    j = instance_to_json({p, q, std::nullopt, std::nullopt});
  } else if (o.family == "lowerbound") {
    require(o.shape, "--shape");
    j = instance_to_json(instance_from_lower_bound(gen_lower_bound_instance(parse_shape(o.shape))));
  } else if (o.family == "pp36") {
    const auto [p, q] = gen_pp36_instance();
    j = instance_to_json({p, q, std::nullopt, std::nullopt});
  } else if (o.family == "twok5") {
    j = graph_to_json(example_two_k5());
  } else if (o.family == "petersen") {
    j = graph_to_json(petersen_graph());
  } else if (o.family == "eulerian") {
    j = graph_to_json(random_eulerian_graph(rng, o.vertices, o.delta));
  } else if (o.family == "graph") {
    j = graph_to_json(random_graph(rng, o.vertices, 0.5));
  } else {
    throw Error(Errc::InvalidInput,
                "--family must be one of random, lowerbound, pp36, twok5, petersen, eulerian, graph");
  }
  emit(o, j, out);
  return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  AcceptanceOptions opts;
  if (!o.criteria.empty()) opts.only = parse_int_list(o.criteria, "--criteria");
  bool all = true;
  run_acceptance(opts, [&](const CriterionResult& r) {
    out << format_result(r) << std::endl;
    all = all && r.pass;
  });
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified resolutions in partition polytopes and path/cycle odd-covers of graphs", "polyresolve"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_cap = [&](CLI::App* c) { c->add_option("--cap", o.cap, "State-count cap for exact searches"); };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Write JSON output to this file");
    c->add_option("--dot", o.dot, "Write a DOT rendering to this file");
  };

  auto* resolve_cmd = app.add_subcommand("resolve", "Short resolution of an instance");
  resolve_cmd->add_option("--instance", o.instance, "Instance JSON")->required();
  resolve_cmd->add_flag("--show-loops", o.show_loops, "Draw loops in the DOT output");
  add_out(resolve_cmd);

  auto* odd_cmd = app.add_subcommand("oddcover", "Path or cycle odd-cover of a graph");
  odd_cmd->add_option("--graph", o.graph, "Graph JSON")->required();
  odd_cmd->add_option("--kind", o.kind, "path or cycle")->check(CLI::IsMember({"path", "cycle"}));
  add_out(odd_cmd);

  auto* arb_cmd = app.add_subcommand("arboricity", "Decomposition into linear forests");
  arb_cmd->add_option("--graph", o.graph, "Graph JSON")->required();
  add_out(arb_cmd);

  auto* diam_cmd = app.add_subcommand("diameter", "Diameter bounds or exact diameter of PP(shape)");
  diam_cmd->add_option("--shape", o.shape, "Cluster sizes, e.g. 2,2,2,2")->required();
  diam_cmd->add_flag("--exact", o.exact, "Exact value by breadth-first search");
  add_cap(diam_cmd);

  auto* lb_cmd = app.add_subcommand("lowerbound", "Lower-bound instances, progress bound, pruned search");
  lb_cmd->add_option("--shape", o.shape, "Generate the family instance for this shape");
  lb_cmd->add_option("--instance", o.instance, "Instance JSON to bound");
  lb_cmd->add_option("--bound", o.bound, "Run the pruned search for resolutions of length <= L");
  lb_cmd->add_flag("--show-loops", o.show_loops, "Draw loops in the DOT output");
  add_out(lb_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
  verify_cmd->add_option("--cert", o.cert, "Certificate JSON")->required();
  verify_cmd->add_option("--instance", o.instance, "Instance JSON (resolutions)");
  verify_cmd->add_option("--graph", o.graph, "Graph JSON (odd-covers, linear forests)");
  verify_cmd->add_option("--out", o.out, "Write the report to this file");

  auto* gen_cmd = app.add_subcommand("gen", "Generate instances and graphs");
  gen_cmd->add_option("--family", o.family, "random, lowerbound, pp36, twok5, petersen, eulerian, graph");
  gen_cmd->add_option("--seed", o.seed, "Random seed");
  gen_cmd->add_option("--shape", o.shape, "Cluster sizes");
  gen_cmd->add_option("--vertices", o.vertices, "Vertex count for random graphs")->check(CLI::Range(1, 64));
  gen_cmd->add_option("--delta", o.delta, "Maximum degree for random Eulerian graphs");
  gen_cmd->add_option("--out", o.out, "Write JSON output to this file");

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  self_cmd->add_option("--criteria", o.criteria, "Comma-separated criterion numbers (default: all)");

  std::vector<char*> argv;
  std::vector<std::string> storage(args);
  if (storage.empty()) storage.emplace_back("polyresolve");
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*resolve_cmd) return cmd_resolve(o, out, err);
    if (*odd_cmd) return cmd_oddcover(o, out, err);
    if (*arb_cmd) return cmd_arboricity(o, out, err);
    if (*diam_cmd) return cmd_diameter(o, out);
    if (*lb_cmd) return cmd_lowerbound(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*gen_cmd) return cmd_gen(o, out);
    if (*self_cmd) return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::Internal ? kVerifyFailed : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace polyresolve

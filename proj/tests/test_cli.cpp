#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "polyresolve/cli.hpp"
#include "polyresolve/instances.hpp"
#include "polyresolve/io.hpp"

using namespace polyresolve;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "polyresolve");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "polyresolve_cli_test") {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"--no-such-flag"}).code == 2);
  CHECK(run({"resolve"}).code == 2);
  CHECK(run({"resolve", "--instance", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"diameter", "--shape", "2,x"}).code == 2);
  CHECK(run({"oddcover", "--graph", "g.json", "--kind", "tree"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("diameter") {
  const Run exact = run({"diameter", "--exact", "--shape", "2,2,2,2"});
  CHECK(exact.code == 0);
  CHECK(exact.out == "3\n");
  const Run bounds = run({"diameter", "--shape", "3,3,3,3,3,3"});
  CHECK(bounds.code == 0);
  const Json j = Json::parse(bounds.out);
  CHECK(j["upper"] == 5);
  CHECK(j["lower"] == 4);
  CHECK(run({"diameter", "--exact", "--shape", "3,3,3,3,3,3", "--cap", "100"}).code == 2);
}

TEST_CASE("resolve and verify") {
  TempDir tmp;
  const auto [p, q] = gen_pp36_instance();
  const std::string inst = tmp.file("inst.json");
  write_text_file(inst, instance_to_json({p, q, std::nullopt, std::nullopt}).dump());
  const std::string cert = tmp.file("cert.json");
  const std::string dot = tmp.file("cdg.dot");
  const Run r = run({"resolve", "--instance", inst, "--out", cert, "--dot", dot});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dot));
  CHECK(resolution_from_json(read_json_file(cert)).size() == 5);

  const Run ok = run({"verify", "--cert", cert, "--instance", inst});
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["pass"] == true);

  write_text_file(cert, resolution_to_json({{0, 9}}).dump());
  const Run bad = run({"verify", "--cert", cert, "--instance", inst});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out)["pass"] == false);

  CHECK(run({"verify", "--cert", cert}).code == 2);
}

TEST_CASE("odd-covers and linear forests") {
  TempDir tmp;
  const std::string g = tmp.file("g.json");
  write_text_file(g, graph_to_json(example_two_k5()).dump());
  const std::string cert = tmp.file("cover.json");
  CHECK(run({"oddcover", "--graph", g, "--kind", "cycle", "--out", cert}).code == 0);
  const OddCoverCert c = odd_cover_from_json(read_json_file(cert));
  CHECK(c.parts.size() == 3);
  CHECK(run({"verify", "--cert", cert, "--graph", g}).code == 0);

  const std::string forests = tmp.file("lf.json");
  CHECK(run({"arboricity", "--graph", g, "--out", forests}).code == 0);
  CHECK(run({"verify", "--cert", forests, "--graph", g}).code == 0);

  write_text_file(cert, odd_cover_to_json({PartKind::Path, {{{0, 1}}}}).dump());
  CHECK(run({"verify", "--cert", cert, "--graph", g}).code == 1);
}

TEST_CASE("generators") {
  const Run lb = run({"gen", "--family", "lowerbound", "--shape", "2,2,2,2"});
  CHECK(lb.code == 0);
  const Instance inst = instance_from_json(Json::parse(lb.out));
  CHECK(inst.bound == 3);

  const Run a = run({"gen", "--family", "random", "--seed", "5"});
  const Run b = run({"gen", "--family", "random", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const Run e = run({"gen", "--family", "eulerian", "--vertices", "9", "--delta", "4", "--seed", "2"});
  CHECK(e.code == 0);
  CHECK(is_eulerian(graph_from_json(Json::parse(e.out))));
  CHECK(run({"gen", "--family", "unknown"}).code == 2);

  const Run lower = run({"lowerbound", "--shape", "3,3,3,3,3,3"});
  CHECK(lower.code == 0);
}

TEST_CASE("selftest subset") {
  const Run r = run({"selftest", "--criteria", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

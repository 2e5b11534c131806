#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fincat/dsl.hpp"
#include "json.hpp"

namespace {

const std::string kFixtures = FINCAT_FIXTURE_DIR;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fincat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST_CASE("indefinite reports the B4 counterexample") {
  const auto r = run({"indefinite", fixture("b4.fincat"), "--dagger", "D"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL indefinite [D]: counterexample: object x, a = g2") != std::string::npos);
  CHECK(run({"indefinite", fixture("b3.fincat"), "--dagger", "D"}).code == 0);
}

TEST_CASE("triangles pass on TB4 and on the dagger") {
  CHECK(run({"triangles", fixture("b4.fincat"), "--name", "TB4"}).code == 0);
  CHECK(run({"triangles", fixture("b4.fincat"), "--name", "D"}).code == 0);
  CHECK(run({"triangles", fixture("b4.fincat"), "--name", "nope"}).code == 2);
}

TEST_CASE("broken input exits 2 with a positioned diagnostic") {
  const auto r = run({"validate", fixture("broken.fincat")});
  CHECK(r.code == 2);
  CHECK(r.err.find("broken.fincat:5:20: UnresolvedReference") != std::string::npos);
  CHECK(run({"validate", fixture("missing.fincat")}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every checked-in fixture validates") {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".fincat" || entry.path().filename() == "broken.fincat") continue;
    INFO(entry.path().string());
    CHECK(run({"validate", entry.path().string()}).code == 0);
  }
}

TEST_CASE("json reports follow the schema and are deterministic") {
  const std::vector<std::string> args{"--json", "herm", fixture("b4.fincat"), "--inv", "TB4"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == fincat::cli::kSchema);
  CHECK(j["command"] == "herm");
  CHECK(j["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(j["passed"] == true);
  CHECK(!j.contains("timing_ms"));
  CHECK(nlohmann::json::parse(run({"--json", "--timing", "herm", fixture("b4.fincat"), "--inv", "TB4"}).out)
            .contains("timing_ms"));
  // flags may also follow the subcommand
  CHECK(nlohmann::json::parse(run({"herm", fixture("b4.fincat"), "--inv", "TB4", "--json"}).out)["command"] == "herm");
}

TEST_CASE("sha256 of known strings") {
  CHECK(fincat::cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(fincat::cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("herm with a positivity notion") {
  const auto dir = std::filesystem::temp_directory_path() / "fincat_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "b4p.fincat").string();
  {
    std::ifstream in(fixture("b4.fincat"));
    std::ofstream out(path);
    out << in.rdbuf() << "\npositivity P on TB4 { x: { id_x } }\n";
  }
  const auto r = run({"herm", path, "--inv", "TB4", "--positivity", "P"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 objects") != std::string::npos);
  CHECK(run({"herm", path, "--inv", "TB4", "--positivity", "Q"}).code == 2);
}

TEST_CASE("equivalence modes") {
  const auto f = fixture("walk_equiv.fincat");
  CHECK(run({"equiv", f, "--from", "Walk", "--to", "One", "--functor", "Collapse"}).code == 0);
  CHECK(run({"equiv", f, "--from", "DWalk", "--to", "DOne", "--functor", "Collapse", "--dagger"}).code == 0);
  const auto inv = run({"equiv", f, "--from", "TWalk", "--to", "TOne", "--functor", "Collapse", "--involutive"});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("PASS involutive-inverse") != std::string::npos);
  CHECK(run({"equiv", f, "--from", "One", "--to", "Walk", "--functor", "Collapse"}).code == 2);
  CHECK(run({"equiv", f, "--from", "DWalk", "--to", "DOne", "--functor", "Collapse", "--dagger", "--involutive"}).code ==
        2);
}

TEST_CASE("corollary honours the cap and FINCAT_CAP") {
  const auto r = run({"corollary", fixture("one.fincat"), "--source", "D", "--target", "D"});
  CHECK(r.code == 0);
  CHECK(run({"corollary", fixture("b4.fincat"), "--source", "D", "--target", "D", "--cap", "1"}).code == 2);
  setenv("FINCAT_CAP", "1", 1);
  CHECK(run({"corollary", fixture("b4.fincat"), "--source", "D", "--target", "D"}).code == 2);
  CHECK(run({"corollary", fixture("b4.fincat"), "--source", "D", "--target", "D", "--cap", "10"}).code == 0);
  unsetenv("FINCAT_CAP");
}

TEST_CASE("gen writes the same bytes as the printer") {
  const auto dir = std::filesystem::temp_directory_path() / "fincat_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = (dir / "a.fincat").string(), b = (dir / "b.fincat").string();
  CHECK(run({"gen", "delooping", "n=4", "-o", a}).code == 0);
  CHECK(run({"gen", "fixture", "name=B4", "-o", b}).code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(b) == slurp(fixture("b4.fincat")));
  CHECK(run({"gen", "matrix", "q=2", "maxdim=1", "-o", a}).code == 0);
  CHECK(slurp(a) == slurp(fixture("m1f4.fincat")));
  CHECK(run({"gen", "discrete", "perm=1,2,0", "-o", a}).code == 2);
  CHECK(run({"gen", "matrix", "q=6", "-o", a}).code == 2);
  CHECK(run({"gen", "weird", "-o", a}).code == 2);
  CHECK(run({"gen", "chain", "length=x", "-o", a}).code == 2);
}

TEST_CASE("report over files") {
  const auto r = run({"report", fixture("b4.fincat")});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS unit-criterion") != std::string::npos);
}

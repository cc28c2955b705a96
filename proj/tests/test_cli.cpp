#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cpgroups/cli.hpp"

using namespace cpg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cpgroups");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", "symmetric:3", "--format", "records"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "in_cp3=true\n"));
  CHECK(has(r.out, "in_cp2=false\n"));
  CHECK(has(r.out, "cp2_witness.orders=2,2,3\n"));
  CHECK(has(r.out, "axiom.triangle=true\n"));

  r = run({"analyze", "cyclic:6", "--format", "records"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "in_cp3=false\n"));
  CHECK(has(r.out, "in_cp=false\n"));

  r = run({"analyze", "dicyclic:8", "--format", "records", "--audit-triangle"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "in_cp2=true\n"));
  CHECK(has(r.out, "audit.ultrametric=true\n"));

  r = run({"analyze", "symmetric:4"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "(1 2)"));
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", "nonsense"}).code == kExitBadInput);
  CHECK(run({"analyze", "cyclic:0"}).code == kExitBadInput);
  CHECK(run({"analyze", "symmetric:8"}).code == kExitCapExceeded);
  CHECK(run({"analyze", "symmetric:7", "--cap-elements", "1000"}).code == kExitCapExceeded);
  CHECK(run({"analyze", "symmetric:4", "--format", "yaml"}).code == kExitBadInput);
  CHECK(run({"bogus"}).code == kExitBadInput);
  CHECK(run({"subgroups", "cyclic:6", "--cap-subgroups", "4"}).code == kExitCapExceeded);
  CHECK(run({"analyze", "symmetric:6", "--audit-triangle"}).code == kExitCapExceeded);
  const auto r = run({"analyze", "nonsense"});
  CHECK(r.out.empty());
  CHECK(has(r.err, "error"));
}

TEST_CASE("classify") {
  auto r = run({"classify", "--max-order", "8"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "symmetric:3"));
  CHECK(has(r.out, "dihedral:8"));

  r = run({"classify", "--max-order", "24", "--format", "records"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "name=symmetric:4 order=24 cp=true cp2=false cp3=false solvable=true derived_length=3"));
  CHECK(has(r.out, "name=cyclic:6 order=6 cp=false cp2=false cp3=false"));
  CHECK(has(r.out, "name=alternating:4 order=12 cp=true cp2=true cp3=true"));

  r = run({"classify", "--max-order", "1", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);

  CHECK(run({"classify"}).code == kExitBadInput);
}

TEST_CASE("classify is deterministic") {
  const auto a = run({"classify", "--max-order", "60"});
  const auto b = run({"classify", "--max-order", "60"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("verify") {
  auto r = run({"verify", "theorem1", "--max-order", "60"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "RESULT: pass"));
  r = run({"verify", "theorem3", "--max-order", "64"});
  CHECK(r.code == kExitOk);
  r = run({"verify", "problem1", "--max-order", "24"});
  CHECK(r.code == kExitOk);
  CHECK_FALSE(has(r.out, "RESULT: pass"));
  CHECK(run({"verify", "theorem9"}).code == kExitBadInput);
}

TEST_CASE("distance matrix") {
  auto r = run({"distance-matrix", "cyclic:2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "e,a\n0,1\n1,0\n");
  r = run({"distance-matrix", "cyclic:1"});
  CHECK(r.out == "e\n0\n");

  const auto path = (std::filesystem::temp_directory_path() / "cpg_dm.csv").string();
  r = run({"distance-matrix", "symmetric:3", "--output", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "(),(1 2),(1 2 3),(2 3),(1 3 2),(1 3)");
  std::filesystem::remove(path);

  r = run({"distance-matrix", "product:cyclic:2,cyclic:2"});
  CHECK(r.out.substr(0, r.out.find('\n')) == "\"(e, e)\",\"(e, a)\",\"(a, e)\",\"(a, a)\"");
}

TEST_CASE("subgroups export") {
  const auto r = run({"subgroups", "cyclic:6"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "01\n09\n15\n3f\n");
}

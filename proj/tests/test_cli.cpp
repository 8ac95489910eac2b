// Copyright 2026 The dimernet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "dimernet/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dimernet");
  std::ostringstream out, err;
  const int code = dimernet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("dimernet_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"rdm", "--lattice", "chain:6"}).code == 2);
  CHECK(run({"verify", "--lattice", "chain:6", "--trials", "0"}).code == 2);
}

TEST_CASE("lattice and budget errors map to their exit codes") {
  CHECK(run({"coverings", "--lattice", "square:2x2"}).code == 3);
  CHECK(run({"coverings", "--lattice", "hex:3"}).code == 3);
  CHECK(run({"coverings", "--lattice", "chain:20"}).code == 4);
  CHECK(run({"coverings", "--lattice", "chain:14", "--max-nodes", "14"}).code == 0);
  CHECK(run({"rdm", "--lattice", "chain:6", "--defects", "sym:1", "--keep", "0"}).code == 5);
  CHECK(run({"rdm", "--lattice", "chain:6", "--defects", "fixed:0,2", "--keep", "0"}).code == 5);
  CHECK(run({"rdm", "--lattice", "chain:6", "--keep", "0,x"}).code == 5);
  CHECK(run({"rdm", "--state", "/nonexistent/dump.bin", "--keep", "0"}).code == 6);
  CHECK(run({"bounds", "point", "--p3", "0"}).code == 5);
}

TEST_CASE("coverings summary and full listing") {
  const auto r = run({"coverings", "--lattice", "chain:4", "--full"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string first, line;
  std::getline(lines, first);
  const json summary = json::parse(first);
  CHECK(summary["count"] == 2);
  CHECK(summary["schema_version"] == "1");
  CHECK(summary["convention"] == "canonical-order");
  int listed = 0;
  while (std::getline(lines, line)) {
    CHECK(json::parse(line).contains("pairs"));
    ++listed;
  }
  CHECK(listed == 2);
  const json sym = json::parse(run({"coverings", "--lattice", "chain:6", "--defects", "sym:2"}).out);
  CHECK(sym["placements"].size() == 15);
  CHECK(sym["defect_mode"] == "symmetric");
}

TEST_CASE("rdm report") {
  const auto r = run({"rdm", "--lattice", "chain:6", "--defects", "sym:2", "--keep", "0,1"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["command"] == "rdm");
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["convention"] == "canonical-order");
  CHECK(doc.contains("two_node_form"));
  CHECK(doc.contains("ppt"));
  const json one = json::parse(run({"rdm", "--lattice", "chain:6", "--defects", "sym:2", "--keep", "3"}).out);
  CHECK(one["single_node_form"]["p1"].get<double>() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("entanglement and gme reports") {
  const json ent = json::parse(run({"entanglement", "--lattice", "chain:6", "--defects", "sym:2"}).out);
  CHECK(ent["pairs"].size() == 5);
  CHECK(ent.contains("telecloning_classes"));
  const json pair = json::parse(run({"entanglement", "--lattice", "chain:6", "--pair", "0,3"}).out);
  CHECK(pair["pairs"].size() == 1);
  CHECK(pair["pairs"][0]["distance"] == 3);
  CHECK(run({"entanglement", "--lattice", "chain:6", "--pair", "0"}).code == 5);

  const json gme = json::parse(run({"gme", "--lattice", "chain:6", "--defects", "sym:2", "--full"}).out);
  CHECK(gme["report"]["certified"] == true);
  CHECK(gme["report"]["bipartitions_checked"] == 31);
  const json vac = json::parse(run({"gme", "--lattice", "chain:8", "--defects", "sym:8"}).out);
  CHECK(vac["report"]["certified"] == false);
}

TEST_CASE("bounds point and fig1") {
  const auto p = run({"bounds", "point", "--p1", "0", "--p3", "1", "--m", "4"});
  REQUIRE(p.code == 0);
  const json doc = json::parse(p.out);
  CHECK(doc["report"]["q_max"].get<double>() == doctest::Approx(0.5));
  CHECK(doc["report"]["f_clo"].get<double>() == doctest::Approx(0.625));

  const fs::path dir = scratch_dir();
  const fs::path csv = dir / "fig1.csv";
  const auto f = run({"bounds", "fig1", "--m", "4,inf", "--p3-grid", "0.5:1:0.25", "--out", csv.string()});
  REQUIRE(f.code == 0);
  const std::string text = slurp(csv);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  const json meta = json::parse(slurp(csv.string() + ".meta.json"));
  CHECK(meta["rows"] == 6);
  CHECK(meta["schema_version"] == "1");
  CHECK(run({"bounds", "fig1", "--m", "0"}).code == 5);
  CHECK(run({"bounds", "fig1", "--out", (dir / "missing" / "x.csv").string()}).code == 6);
  fs::remove_all(dir);
}

TEST_CASE("build-state dump feeds the analysis commands") {
  const fs::path dir = scratch_dir();
  const fs::path dump = dir / "state.bin";
  const auto b = run({"build-state", "--lattice", "chain:6", "--defects", "sym:2", "--out", dump.string()});
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)["amplitude_count"] == 729);
  CHECK(run({"build-state", "--lattice", "chain:6"}).code == 5);
  const auto direct = run({"rdm", "--lattice", "chain:6", "--defects", "sym:2", "--keep", "0,2"});
  const auto loaded = run({"rdm", "--state", dump.string(), "--keep", "0,2"});
  REQUIRE(loaded.code == 0);
  CHECK(json::parse(direct.out)["rdm"] == json::parse(loaded.out)["rdm"]);
  CHECK(json::parse(loaded.out)["graph"] == "chain_pbc:6");
  fs::remove_all(dir);
}

TEST_CASE("verify passes on the reference example and is deterministic") {
  const std::vector<std::string> args{"verify", "--lattice", "chain:6", "--defects", "sym:2", "--seed", "7"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.size() > 5);
  CHECK(a.out.substr(a.out.size() - 5) == "PASS\n");
  const auto other = run({"verify", "--lattice", "chain:6", "--defects", "sym:2", "--seed", "8"});
  CHECK(other.code == 0);
  const auto fixed = run({"verify", "--lattice", "chain:6", "--defects", "fixed:0,3", "--trials", "3",
                          "--triples", "5"});
  CHECK(fixed.code == 0);
}

TEST_CASE("JSON outputs are byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"entanglement", "--lattice", "square:2x4", "--defects", "sym:2"},
           {"gme", "--lattice", "chain:8", "--defects", "sym:2", "--full"},
           {"bounds", "fig1"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

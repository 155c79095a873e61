// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool. The binary path arrives in
// CUBEFEC_CLI and a scratch directory in CUBEFEC_TMP.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli() {
  const char* p = std::getenv("CUBEFEC_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::filesystem::path scratch() {
  const char* p = std::getenv("CUBEFEC_TMP");
  REQUIRE(p != nullptr);
  std::filesystem::create_directories(p);
  return p;
}

int run(const std::string& args, std::string* output = nullptr) {
  const auto out_path = scratch() / "stdout.txt";
  const std::string cmd = cli() + " " + args + " > " + out_path.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream is(out_path);
    std::ostringstream os;
    os << is.rdbuf();
    *output = os.str();
  }
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("dims table") {
  std::string out;
  CHECK(run("dims --n 1 --rmax 3", &out) == 0);
  CHECK(out.find("k=0: 2 3 4") != std::string::npos);
  CHECK(out.find("k=1: 2 3 4") != std::string::npos);

  CHECK(run("dims --n 3 --rmax 7 --constructive", &out) == 0);
  CHECK(out.find("408") != std::string::npos);  // S_7 Lambda^1 in 3-D
}

TEST_CASE("basis export is deterministic") {
  const auto p1 = scratch() / "s1.json";
  const auto p2 = scratch() / "s2.json";
  CHECK(run("basis --n 3 --r 1 --k 2 --out " + p1.string()) == 0);
  CHECK(run("basis --n 3 --r 1 --k 2 --out " + p2.string()) == 0);
  const std::string bytes1 = slurp(p1);
  CHECK(bytes1 == slurp(p2));
  const auto j = nlohmann::json::parse(bytes1);
  CHECK(j["dim"] == 18);
  CHECK(j["forms"].size() == 18);
}

TEST_CASE("dof export") {
  const auto p = scratch() / "dofs.json";
  CHECK(run("dofs --n 2 --r 2 --k 1 --out " + p.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(p));
  CHECK(j["dim"] == 14);
  CHECK(j["dofs"].size() == 14);

  const auto m = scratch() / "dofs.csv";
  CHECK(run("dofs --n 1 --r 1 --k 0 --out " + p.string() + " --matrix " + m.string()) ==
        0);
  CHECK(slurp(m) == "1,-1\n1,1\n");
}

TEST_CASE("verify suites") {
  CHECK(run("verify --suite unisolvence --n 2 --rmax 3") == 0);
  std::string out;
  CHECK(run("verify --suite koszul --n 3 --rmax 4 --format json", &out) == 0);
  const auto j = nlohmann::json::parse(out);
  CHECK(j["pass"] == true);
  CHECK(run("verify --suite nosuchsuite") == 2);
}

TEST_CASE("mesh complexes") {
  std::string out;
  CHECK(run("complex --mesh grid:2x2 --r 2 --format json", &out) == 0);
  const auto j = nlohmann::json::parse(out);
  CHECK(j["defects"] == nlohmann::json::array({1, 0, 0}));
  CHECK(j["continuity"] == true);
  CHECK(j["pass"] == true);

  // JSON mesh file input and triplet export
  const auto mesh_path = scratch() / "mesh.json";
  {
    std::ofstream os(mesh_path);
    os << R"({"n":1,"grid":[2]})";
  }
  const auto prefix = (scratch() / "cpx").string();
  CHECK(run("complex --mesh " + mesh_path.string() + " --r 2 --export " + prefix) == 0);
  CHECK(std::filesystem::exists(prefix + ".d0.txt"));

  CHECK(run("complex --mesh grid:2x2 --r 1") == 2);  // r below the dimension
}

TEST_CASE("usage errors") {
  CHECK(run("") == 2);
  CHECK(run("nosuchcommand") == 2);
  CHECK(run("basis --n 3") == 2);  // missing required flags
}

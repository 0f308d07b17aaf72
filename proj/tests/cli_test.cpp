// Copyright 2026 The polyskel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtest/gtest.h"
#include "polyskel/cli.hpp"
#include "polyskel/families.hpp"
#include "polyskel/vertex_io.hpp"

namespace polyskel {
namespace {

using json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage = {"polyskel"};
  storage.insert(storage.end(), args);
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("polyskel-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenWritesHeaderFirst) {
  const std::string file = path("b3.txt");
  const Result r = run_cli({"gen", "birkhoff", "--n", "3", "-o", file});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "6 9");
  EXPECT_EQ(read_vertices(file).size(), 6u);
}

TEST_F(CliTest, SkeletonExactResolvesEveryPair) {
  const std::string vfile = path("b3.txt");
  ASSERT_EQ(run_cli({"gen", "birkhoff", "--n", "3", "-o", vfile}).code, kExitOk);
  const std::string jfile = path("b3.json");
  const std::string lfile = path("b3.csv");
  const Result r =
      run_cli({"skeleton", "-i", vfile, "--method", "exact", "-o", jfile, "--ledger", lfile});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(std::ifstream(jfile));
  EXPECT_EQ(j["pairs"], 15);
  EXPECT_EQ(j["unresolved"], 0);
  EXPECT_EQ(j["edges"].size() + j["non_edges"].get<std::size_t>(), 15u);
  // Any two permutations of three elements differ by one cycle.
  EXPECT_EQ(j["edges"].size(), 15u);
  EXPECT_TRUE(std::filesystem::exists(lfile));
}

TEST_F(CliTest, ShardedSkeletonMatchesInMemory) {
  const std::string vfile = path("cgp4.txt");
  ASSERT_EQ(run_cli({"gen", "cgp", "--n", "4", "-o", vfile}).code, kExitOk);
  const Result plain = run_cli({"skeleton", "-i", vfile, "--ledger", path("a.csv")});
  const Result sharded = run_cli({"skeleton", "-i", vfile, "--shards", "4", "--work-dir",
                                  path("spill"), "--ledger", path("b.csv")});
  ASSERT_EQ(plain.code, kExitOk);
  ASSERT_EQ(sharded.code, kExitOk);
  EXPECT_EQ(json::parse(plain.out)["edges"], json::parse(sharded.out)["edges"]);
  std::stringstream a, b;
  a << std::ifstream(path("a.csv")).rdbuf();
  b << std::ifstream(path("b.csv")).rdbuf();
  EXPECT_EQ(a.str(), b.str());
}

TEST_F(CliTest, NumericMethodReportsIndeterminate) {
  const std::string vfile = path("hex.txt");
  ASSERT_EQ(run_cli({"gen", "permutohedron", "--n", "3", "-o", vfile}).code, kExitOk);
  const Result r = run_cli({"skeleton", "-i", vfile, "--method", "numeric"});
  EXPECT_EQ(r.code, kExitIndeterminate);
  EXPECT_EQ(json::parse(r.out)["unresolved"], 6);
}

TEST_F(CliTest, RhombusAndVerify) {
  const std::string vfile = write("sq.txt", "4 2\n0 0\n1 0\n0 1\n1 1\n");
  const Result rh = run_cli({"rhombus", "-i", vfile});
  ASSERT_EQ(rh.code, kExitOk);
  EXPECT_EQ(json::parse(rh.out)["marked_nonedge"], 2);

  const Result diag = run_cli({"verify", "-i", vfile, "--pair", "0", "3"});
  ASSERT_EQ(diag.code, kExitOk);
  EXPECT_EQ(json::parse(diag.out)["status"], "non-edge");

  const Result side = run_cli({"verify", "-i", vfile, "--pair", "0", "1", "--method", "exact"});
  ASSERT_EQ(side.code, kExitOk);
  const json s = json::parse(side.out);
  EXPECT_EQ(s["status"], "edge");
  EXPECT_TRUE(s.contains("certificate"));

  const Result num = run_cli({"verify", "-i", vfile, "--pair", "0", "1", "--method", "numeric"});
  EXPECT_EQ(num.code, kExitOk);
  EXPECT_EQ(json::parse(num.out)["status"], "edge");

  EXPECT_EQ(run_cli({"verify", "-i", vfile, "--pair", "0", "9"}).code, kExitDomain);
}

TEST_F(CliTest, AuditRhombus) {
  const Result cgp = run_cli({"audit", "rhombus", "--family", "cgp", "--n", "4"});
  ASSERT_EQ(cgp.code, kExitOk) << cgp.err;
  EXPECT_NE(cgp.out.find("fulfills: true"), std::string::npos);
  const Result hex = run_cli({"audit", "rhombus", "--family", "permutohedron", "--n", "3"});
  ASSERT_EQ(hex.code, kExitOk);
  EXPECT_NE(hex.out.find("fulfills: false"), std::string::npos);
}

TEST_F(CliTest, AuditTimingTable) {
  const Result r = run_cli({"audit", "timing", "--instances", "birkhoff:3,cube:3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("birkhoff:3"), std::string::npos);
  EXPECT_NE(r.out.find("cube:3"), std::string::npos);
  EXPECT_EQ(run_cli({"audit", "timing", "--instances", "birkhoff"}).code, kExitDomain);
}

TEST_F(CliTest, Oracles) {
  Result r = run_cli({"oracle", "birkhoff", "--first", "0 1 2 3", "--second", "1 0 3 2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "non-edge");
  EXPECT_EQ(j["witnesses"].size(), 2u);

  r = run_cli({"oracle", "k-assignment", "--m", "2", "--n", "2", "--first", "0 0", "--second",
               "1 1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"], "edge");

  const std::string g = write("path.txt", "3 2\n0 1\n1 2\n");
  r = run_cli({"oracle", "stab", "--graph", g, "--first", "0", "--second", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"], "non-edge");

  const std::string t1 = write("t1.txt", "4 3\n0 1\n1 2\n2 3\n");
  const std::string t2 = write("t2.txt", "4 3\n0 1\n1 2\n1 3\n");
  r = run_cli({"oracle", "spanning-tree", "--first", t1, "--second", t2});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"], "edge");

  const std::string d1 = write("d1.txt", "3 2\n0 -> 1\n1 -> 2\n");
  const std::string d2 = write("d2.txt", "3 2\n0 -> 1\n2 -> 1\n");
  r = run_cli({"oracle", "cimtree", "--first", d1, "--second", d2});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"], "edge");

  EXPECT_EQ(run_cli({"oracle", "tsp", "--first", "0", "--second", "1"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"oracle", "birkhoff", "--first", "0 1", "--second", "0 1"}).code,
            kExitDomain);
}

TEST_F(CliTest, ChordalWitness) {
  const std::string g = write("g.txt", "3 1\n0 1\n");
  const std::string h = write("h.txt", "3 1\n1 2\n");
  Result r = run_cli({"chordal-witness", "--g", g, "--h", h});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"], "witnesses");

  const std::string k3 = write("k3.txt", "3 3\n0 1\n1 2\n0 2\n");
  r = run_cli({"chordal-witness", "--g", g, "--h", k3});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"], "edge");

  const std::string e5 = write("e5.txt", "5 0\n");
  const std::string m5 = write("m5.txt", "5 3\n0 1\n2 3\n1 4\n");
  r = run_cli({"chordal-witness", "--g", e5, "--h", m5, "--max-components", "2"});
  EXPECT_EQ(r.code, kExitIndeterminate);
  EXPECT_EQ(json::parse(r.out)["verdict"], "indeterminate");

  const std::string c4 = write("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
  const std::string e4 = write("e4.txt", "4 0\n");
  EXPECT_EQ(run_cli({"chordal-witness", "--g", c4, "--h", e4}).code, kExitDomain);
}

TEST_F(CliTest, FixtureAudit) {
  const Result r = run_cli({"audit", "fixture-cimtree6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("imsets distinct: true"), std::string::npos);
  EXPECT_NE(r.out.find("top pair: non-edge (certificate checked)"), std::string::npos);
  EXPECT_NE(r.out.find("top pair has witness: false"), std::string::npos);
}

TEST_F(CliTest, UsageAndDomainErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"gen", "birkhoff", "--n", "three"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"skeleton"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"gen", "birkhoff", "--n", "0"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"gen", "simplex", "--n", "3"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"skeleton", "-i", path("missing.txt")}).code, kExitDomain);
  const std::string bad = write("bad.txt", "2 2\n0 1\n0 x\n");
  const Result r = run_cli({"skeleton", "-i", bad});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace polyskel

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gorth/cli.hpp"

using namespace gorth;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gorth_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, EmitTauThenClassify) {
  auto e = run({"emit", "S:tau", "-o", path("t.json")});
  EXPECT_EQ(e.code, 0);
  auto c = run({"classify", path("t.json")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "S:tau\n");
}

TEST_F(CliTest, EmitSingleThenClassify) {
  auto e = run({"emit", "S:single[s=1,eps=+,a2=1/4]", "--alpha", "1/2", "-o", path("a.json")});
  ASSERT_EQ(e.code, 0) << e.err;
  auto c = run({"classify", path("a.json")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "S:single[s=1,eps=+,a2=1/4]\n");
}

TEST_F(CliTest, EmitToStdoutIsJson) {
  auto e = run({"emit", "S:single[s=1,eps=+,a2=1/4]", "--alpha", "1/2"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(e.out,
            "{\n  \"dim\": 2,\n  \"gram\": [\n    [\"0\", \"0\"],\n    [\"0\", \"1\"]\n  ],\n"
            "  \"xi\": [\n    [\"0\", \"2\"],\n    [\"0\", \"0\"]\n  ],\n  \"v0\": [\"1\", \"0\"]\n}\n");
  auto t = io::parse_triple(e.out);
  EXPECT_EQ(t.xi, (Mat{{0, 2}, {0, 0}}));
}

TEST_F(CliTest, FuzzDoubleChain) {
  auto f = run({"fuzz", "--label", "S:double[s=1]", "--trials", "100", "--seed", "7"});
  EXPECT_EQ(f.code, 0) << f.out << f.err;
  EXPECT_EQ(f.out, "S:double[s=1]\n");
}

TEST_F(CliTest, FuzzIsDeterministicAcrossJobs) {
  auto a = cli::fuzz(parse_label("S:single[s=3,eps=-,a2=4] + T:even[k=0,+]"), Rat(2), 12, 3, 1);
  auto b = cli::fuzz(parse_label("S:single[s=3,eps=-,a2=4] + T:even[k=0,+]"), Rat(2), 12, 3, 3);
  EXPECT_FALSE(a.first_mismatch);
  EXPECT_EQ(a.expected, b.expected);
  EXPECT_EQ(a.first_mismatch, b.first_mismatch);
}

TEST_F(CliTest, EquivExitCodes) {
  run({"emit", "S:single[s=1,eps=+,a2=1]", "--alpha", "1", "-o", path("a1.json")});
  run({"emit", "S:single[s=1,eps=+,a2=4]", "--alpha", "2", "-o", path("a2.json")});
  auto same = run({"equiv", path("a1.json"), path("a1.json")});
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(same.out, "equivalent\n");
  auto diff = run({"equiv", path("a1.json"), path("a2.json")});
  EXPECT_EQ(diff.code, 1);
  EXPECT_EQ(diff.out, "not equivalent\n");

  std::string mixed = write("m.json", R"({"dim": 3, "gram": [[0,0,0],[0,1,0],[0,0,-1]],
      "xi": [[0,0,0],[0,0,2],[0,2,0]], "v0": [1,0,0]})");
  EXPECT_EQ(run({"equiv", mixed, mixed}).code, 4);
}

TEST_F(CliTest, ClassifyFitting) {
  std::string mixed = write("m.json", R"({"dim": 3, "gram": [["0","0","0"],["0","1","0"],["0","0","-1"]],
      "xi": [["0","0","0"],["0","0","2"],["0","2","0"]], "v0": ["1","0","0"]})");
  EXPECT_EQ(run({"classify", mixed}).code, 2);
  auto c = run({"classify", mixed, "--fitting"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "S:tau + U:[dim=2, charpoly=[1,0,-4], sig=(1,1)]\n");
  EXPECT_NO_THROW(parse_label(c.out.substr(0, c.out.size() - 1)));
}

TEST_F(CliTest, ClassifyUndecidable) {
  Triple sp = emit_special(SingleChain{1, 1, 1}, Rat(1));
  Pair ty = emit_type(TypeLabel::even(2, 1));
  Triple t{SymForm(direct_sum({sp.form.gram(), ty.form.gram()})), direct_sum({sp.xi, ty.xi}), unit_vector(5, 0)};
  io::write_triple(t, path("u.json"));
  auto c = run({"classify", path("u.json")});
  EXPECT_EQ(c.code, 4);
  EXPECT_TRUE(c.out.empty());
}

TEST_F(CliTest, Validate) {
  std::string ok = write("ok.json", R"({"dim": 2, "gram": [[0,0],[0,1]], "xi": [[0,2],[0,0]], "v0": [1,0]})");
  auto a = run({"validate", ok});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "ok\n");
  std::string bad = write("bad.json", R"({"dim": 2, "gram": [[0,0],[0,1]], "xi": [[0,0],[2,0]], "v0": [1,0]})");
  auto b = run({"validate", bad});
  EXPECT_EQ(b.code, 1);
  EXPECT_EQ(b.out, "violation: xi*v0 == 0 at (1,0)\n");
}

TEST_F(CliTest, MalformedInput) {
  EXPECT_EQ(run({"classify", write("j.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"classify", write("k.json", R"({"dim": 2, "gram": [[0,0],[0,1]]})")}).code, 2);
  EXPECT_EQ(run({"classify", write("r.json", R"({"dim": 1, "gram": [["1/0"]], "xi": [[0]], "v0": [1]})")}).code, 2);
  EXPECT_EQ(run({"classify", write("s.json", R"({"dim": 2, "gram": [[0,1],[0,1]], "xi": [[0,0],[0,0]], "v0": [1,0]})")}).code, 2);
  EXPECT_EQ(run({"classify", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"emit", "S:single[s=2,eps=+,a2=1]"}).code, 2);
  EXPECT_EQ(run({"emit", "S:bogus"}).code, 2);
  EXPECT_EQ(run({"emit", "S:single[s=1,eps=+,a2=2]"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, InvalidTripleIsBadInput) {
  std::string bad = write("bad.json", R"({"dim": 2, "gram": [[1,0],[0,1]], "xi": [[0,0],[0,0]], "v0": [1,0]})");
  auto c = run({"classify", bad});
  EXPECT_EQ(c.code, 2);
  EXPECT_NE(c.err.find("radical"), std::string::npos);
}

TEST_F(CliTest, OutputIsDeterministic) {
  auto a = run({"emit", "S:double[s=3] + T:pair[k=1] + T:even[k=2,-]"});
  auto b = run({"emit", "S:double[s=3] + T:pair[k=1] + T:even[k=2,-]"});
  EXPECT_EQ(a.out, b.out);
  write("d.json", a.out);
  EXPECT_EQ(run({"classify", path("d.json")}).out, "S:double[s=3] + T:pair[k=1] + T:even[k=2,-]\n");
}

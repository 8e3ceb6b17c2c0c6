#include "lieortho_cli/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string> &args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = lieortho::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("lieortho_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string &name, const std::string &text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

private:
  std::filesystem::path path_;
};

} // namespace

TEST(Cli, CatalogList) {
  const auto r = run({"catalog", "--list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("heisenberg:N"), std::string::npos);
}

TEST(Cli, CatalogThenAnalyzeThroughStdin) {
  const auto cat = run({"catalog", "heisenberg", "2"});
  ASSERT_EQ(cat.code, 0) << cat.err;
  const auto r = run({"analyze", "-", "--json"}, cat.out);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 5);
  EXPECT_EQ(j["center"]["dim"], 1);
  EXPECT_EQ(j["nilpotency_degree"], 2);
  EXPECT_EQ(j["radical"]["dim"], 5);
}

TEST(Cli, AnalyzeTextOutput) {
  const auto cat = run({"catalog", "sl2-semidirect"});
  const auto r = run({"analyze", "-"}, cat.out);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dim: 5"), std::string::npos);
  EXPECT_NE(r.out.find("not solvable"), std::string::npos);
}

TEST(Cli, CheckVerdictsAndExitCodes) {
  TempDir dir;
  const std::string alg = dir.write("sl2.json", run({"catalog", "sl2"}).out);
  const std::string bad = dir.write("bad.json", R"({"matrix":[[1,0,0],[0,1,0],[0,0,-1]]})");
  const std::string good = dir.write("good.json", R"({"matrix":[[-1,0,0],[0,-1,0],[0,0,-1]]})");

  const auto fail = run({"check", alg, bad});
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("Lie-orthogonal: no"), std::string::npos);
  EXPECT_NE(fail.out.find("[e2, e3]"), std::string::npos);
  EXPECT_NE(fail.out.find("[e1, e3]"), std::string::npos);

  const auto ok = run({"check", alg, good, "--json"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_TRUE(j["lie_orthogonal"].get<bool>());
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_TRUE(j["report"]["all_passed"].get<bool>());

  const auto js = nlohmann::json::parse(run({"check", alg, bad, "--json"}).out);
  ASSERT_EQ(js["violations"].size(), 2u);
  EXPECT_EQ(js["violations"][1]["i"], 2);
  EXPECT_EQ(js["violations"][1]["j"], 3);
}

TEST(Cli, HeisenbergCheck) {
  TempDir dir;
  const std::string alg = dir.write("h.json", run({"catalog", "heisenberg", "1"}).out);
  const std::string op = dir.write("j.json", R"({"matrix":[[5,7,"11/3"],[0,0,-1],[0,1,0]]})");
  const auto r = run({"check", alg, op});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("essential block symplectic: yes"), std::string::npos);
  const auto s = run({"spectrum", alg, op, "--json"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto j = nlohmann::json::parse(s.out);
  ASSERT_EQ(j["eigenvalues"].size(), 1u);
  EXPECT_EQ(j["eigenvalues"][0]["eigenvalue"], "5");
  EXPECT_EQ(j["eigenvalues"][0]["ideal_deficit"], 1);
  EXPECT_FALSE(j["splits"].get<bool>());
}

TEST(Cli, EquivAndFitting) {
  TempDir dir;
  const std::string alg = dir.write("h.json", run({"catalog", "heisenberg", "1"}).out);
  const std::string a = dir.write("a.json", R"({"matrix":[[1,0,0],[0,1,0],[0,0,1]]})");
  const std::string b = dir.write("b.json", R"({"matrix":[[3,1,"1/2"],[0,1,0],[0,0,1]]})");
  const std::string c = dir.write("c.json", R"({"matrix":[[1,0,0],[0,1,1],[0,0,1]]})");
  EXPECT_EQ(run({"equiv", alg, a, b}).code, 0);
  EXPECT_EQ(run({"equiv", alg, a, c}).code, 1);
  const auto f = run({"fitting", alg, a, "--json"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(nlohmann::json::parse(f.out)["invertible_part"]["dim"], 3);
}

TEST(Cli, Classify) {
  const auto r = run({"classify", "heisenberg", "--params", R"({"n":2})", "--seed", "3",
                      "--samples", "20", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["lie_orthogonal"].get<bool>());
  EXPECT_EQ(j["verification"]["sound"], 20);
  EXPECT_TRUE(j["verification"]["passed"].get<bool>());
  // non-symplectic block is an input error
  EXPECT_EQ(run({"classify", "heisenberg", "--params", R"({"n":1,"jhat":[[2,0],[0,1]]})"}).code,
            2);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run({"verify", "closure", "--seed", "7", "--samples", "5", "--json"});
  const auto b = run({"verify", "closure", "--seed", "7", "--samples", "5", "--json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(nlohmann::json::parse(a.out)["passed"].get<bool>());
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"catalog", "nope"}).code, 2);
  EXPECT_EQ(run({"analyze", "-"}, "{not json").code, 2);
  EXPECT_EQ(run({"analyze", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"verify", "nope"}).code, 2);
  const auto jac = run({"analyze", "-"}, R"({"dim":3,"brackets":[
      {"i":1,"j":2,"result":{"1":"1","3":"1"}},{"i":1,"j":3,"result":{"2":"1"}}]})");
  EXPECT_EQ(jac.code, 2);
  EXPECT_NE(jac.err.find("Jacobi"), std::string::npos);
  TempDir dir;
  const std::string alg = dir.write("g2.json", run({"catalog", "g2"}).out);
  const std::string op = dir.write("op.json", R"({"matrix":[[1,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_EQ(run({"check", alg, op}).code, 2);
}

#include "gls/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gls/crosscheck.hpp"

namespace gls {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempModel {
 public:
  explicit TempModel(const std::string& json) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("gls_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
             ".json");
    std::ofstream(path_) << json;
  }
  ~TempModel() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(CliProve, ExitCodes) {
  EXPECT_EQ(run({"prove", "[]p -> p"}).code, 0);
  EXPECT_EQ(run({"prove", "--logic", "gl", "[]p -> p"}).code, 1);
  EXPECT_EQ(run({"prove", "--logic", "gl", "[]([]p -> p) -> []p"}).code, 0);
  EXPECT_EQ(run({"prove", "p"}).code, 1);
  EXPECT_EQ(run({"prove", "[]("}).code, 2);
  EXPECT_EQ(run({"prove"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"prove", "--logic", "k", "p"}).code, 2);
}

TEST(CliProve, TextOutputShowsSigma) {
  const CliRun r = run({"prove", "[]p -> p"});
  EXPECT_NE(r.out.find("GLS ⊢ ⇛ []p -> p"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Σ = {[]p}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(BoxL: []p)"), std::string::npos) << r.out;
}

TEST(CliProve, ParseErrorGoesToStderr) {
  const CliRun r = run({"prove", "p -> $"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliProve, SequentInput) {
  EXPECT_EQ(run({"prove", "[]p => []p"}).code, 0);
  EXPECT_EQ(run({"prove", "[]p => p"}).code, 1);
  EXPECT_EQ(run({"prove", "[]p =>> p"}).code, 0);
}

TEST(CliProve, JsonOutput) {
  const CliRun r = run({"prove", "--format", "json", "[]p -> p"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["logic"], "GLS");
  EXPECT_EQ(j["provable"], true);
  EXPECT_EQ(j["sigma"], nlohmann::json::parse(R"(["[]p"])"));
  EXPECT_EQ(j["proof"]["rule"], "ImpR");

  const CliRun refuted = run({"prove", "--format", "json", "[]([]p -> p)"});
  ASSERT_EQ(refuted.code, 1);
  const auto k = nlohmann::json::parse(refuted.out);
  EXPECT_EQ(k["provable"], false);
  EXPECT_EQ(k["countermodel"]["kind"], "chain");
}

TEST(CliProve, LatexAndDot) {
  EXPECT_NE(run({"prove", "--format", "latex", "[]p -> p"}).out.find("\\infer"),
            std::string::npos);
  EXPECT_NE(run({"prove", "--format", "dot", "--logic", "gl", "[]p -> p"}).out.find("digraph"),
            std::string::npos);
}

TEST(CliCountermodel, Outputs) {
  const CliRun provable = run({"countermodel", "[]p -> p"});
  EXPECT_EQ(provable.code, 0);
  EXPECT_NE(provable.out.find("no countermodel"), std::string::npos);

  const CliRun r = run({"countermodel", "[]([]p -> p)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("tail"), std::string::npos);
  EXPECT_NE(r.out.find("smallest enumerated countermodel (world w0)"), std::string::npos) << r.out;

  EXPECT_EQ(run({"countermodel", "--max-worlds", "9", "p"}).code, 2);
}

TEST(CliReduce, PrintsCoreSyntax) {
  const CliRun r = run({"reduce", "[]p -> p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "([]p -> p) -> []p -> p\n");
}

TEST(CliCheckModel, OneWorld) {
  TempModel m(R"({"worlds": ["w"], "relation": [], "valuation": {"w": ["p"]}})");
  EXPECT_EQ(run({"check-model", m.path(), "w", "p"}).code, 0);
  EXPECT_EQ(run({"check-model", m.path(), "w", "[]_|_"}).code, 0);
  const CliRun r = run({"check-model", m.path(), "w", "~p"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(run({"check-model", m.path(), "v", "p"}).code, 2);
}

TEST(CliCheckModel, TwoWorldChain) {
  TempModel m(R"({"worlds": ["a", "b"], "relation": [["a", "b"]], "valuation": {"b": ["p"]}})");
  EXPECT_EQ(run({"check-model", m.path(), "a", "[]p"}).code, 0);
  EXPECT_EQ(run({"check-model", m.path(), "a", "[]p -> p"}).code, 1);
}

TEST(CliCheckModel, RejectsNonGlFrames) {
  TempModel m(R"({"worlds": ["a", "b"], "relation": [["a", "b"], ["b", "a"]], "valuation": {}})");
  const CliRun r = run({"check-model", m.path(), "a", "p"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not a GL-model"), std::string::npos);
  TempModel broken("{ not json");
  EXPECT_EQ(run({"check-model", broken.path(), "a", "p"}).code, 2);
  EXPECT_EQ(run({"check-model", "/nonexistent/model.json", "a", "p"}).code, 2);
}

TEST(CliCrosscheck, EmptyRunPasses) {
  const CliRun r = run({"crosscheck", "--count", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("formulas: 0"), std::string::npos);
  EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST(CliCrosscheck, DefaultRunAgreesAndIsDeterministic) {
  const CliRun a = run({"crosscheck"});
  const CliRun b = run({"crosscheck"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("(a) reduction agreement: 100/100"), std::string::npos) << a.out;
  EXPECT_NE(a.out.find("(c) oracle consistency: 100/100"), std::string::npos) << a.out;
}

TEST(Decide, VerdictCarriesExactlyOneCertificate) {
  const Verdict yes = decide(parse("[]p -> p"), Logic::GLS);
  EXPECT_TRUE(yes.provable);
  EXPECT_TRUE(yes.proof);
  EXPECT_FALSE(yes.countermodel);
  ASSERT_TRUE(yes.sigma);

  const Verdict no = decide(parse("[]p -> p"), Logic::GL);
  EXPECT_FALSE(no.provable);
  EXPECT_FALSE(no.proof);
  ASSERT_TRUE(no.countermodel);
  EXPECT_TRUE(std::holds_alternative<CoreModel>(*no.countermodel));
  EXPECT_FALSE(no.sigma);
}

}  // namespace
}  // namespace gls

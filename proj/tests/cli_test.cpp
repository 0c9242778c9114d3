#include <gtest/gtest.h>

#include <fstream>

#include "statphase/cli/run.hpp"

namespace statphase::cli {
namespace {

json spec(const std::string& text) { return json::parse(text); }

TEST(ParseSpec, Defaults) {
  ProblemSpec s = parse_spec(spec(R"({"P": "y", "Q": "x", "task": "fourier"})"));
  EXPECT_EQ(s.vars, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(s.seed, 1u);
  EXPECT_EQ(s.samples, 3);
  EXPECT_FALSE(s.w.has_value());
  ProblemSpec t = parse_spec(spec(R"({"P": "y", "task": "fourier", "w": "1/2,-3"})"));
  EXPECT_EQ(t.Q, "1");
  EXPECT_EQ(t.w->first, Rational(1, 2));
  EXPECT_EQ(t.w->second, -3);
}

TEST(ParseSpec, Rejections) {
  const char* bad[] = {R"([1, 2])",
                       R"({"Q": "x", "task": "fourier"})",
                       R"({"P": "y", "task": "laplace"})",
                       R"({"P": "y", "task": "fourier", "colour": 1})",
                       R"({"P": "y", "task": "fourier", "w": [1]})",
                       R"({"P": "y", "task": "fourier", "w": [1.5, 2]})",
                       R"({"P": "y", "task": "fourier", "seed": -1})",
                       R"({"P": "y", "task": "irr"})",
                       R"({"P": "y", "task": "betti"})",
                       R"({"P": "y", "task": "irr", "w0": [1, 1], "at": "north"})",
                       R"({"P": 3, "task": "fourier"})"};
  for (const char* b : bad) {
    try {
      parse_spec(spec(b));
      ADD_FAILURE() << b;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ValidationError) << b;
    }
  }
  Report r = run_text("{not json");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.body["error"]["kind"], "ValidationError");
}

TEST(Run, LineOverLine) {
  Report r = run(parse_spec(spec(R"({"P": "y", "Q": "x", "task": "fourier", "seed": 7})")));
  ASSERT_EQ(r.exit_code, 0) << r.body.dump();
  EXPECT_EQ(r.body["seed"], 7);
  EXPECT_EQ(r.body["result"]["spectrum"]["total_rank"], 1);
  // The reported factor is -xi/eta at the sampled point.
  const json& w = r.body["result"]["spectrum"]["w"];
  Rational expect = -parse_rational(w[0].get<std::string>()) / parse_rational(w[1].get<std::string>());
  EXPECT_EQ(r.body["result"]["spectrum"]["components"][0]["factor_values"][0], expect.get_str());
}

TEST(Run, CubicOverLineRanks) {
  Report r = run(parse_spec(spec(R"({"P": "x - y^3", "Q": "x", "task": "fourier", "seed": 7})")));
  const json& s = r.body["result"]["spectrum"];
  EXPECT_EQ(s["total_rank"], 2);
  EXPECT_EQ(s["smooth_rank"], 1);
  EXPECT_EQ(s["jump_rank"], 1);
}

TEST(Run, ErrorsAreStructured) {
  Report a = run_text(R"({"P": "x +* y", "task": "fourier"})");
  EXPECT_EQ(a.exit_code, 2);
  EXPECT_EQ(a.body["error"]["kind"], "SyntaxError");
  EXPECT_EQ(a.body["error"]["position"], 3);
  Report b = run_text(R"({"P": "y", "Q": "0", "task": "fourier"})");
  EXPECT_EQ(b.exit_code, 1);
  EXPECT_EQ(b.body["error"]["module"], "stationary");
  Report c = run_text(R"({"P": "y", "Q": "x", "task": "tame"})");
  EXPECT_EQ(c.exit_code, 2);
  Report d = run_text(R"({"P": "x^30", "task": "milnor"})");
  EXPECT_EQ(d.body["error"]["kind"], "DegreeCapExceeded");
}

TEST(Run, DeterministicAndRoundTrips) {
  const std::string text = R"({"P": "x - y^3 + x*y", "Q": "x + y^2", "task": "fourier", "seed": 3})";
  std::string first = run_text(text).body.dump();
  EXPECT_EQ(run_text(text).body.dump(), first);
  json echo = json::parse(first)["input"];
  EXPECT_EQ(run_text(echo.dump()).body.dump(), first);
}

TEST(Render, TextIsProjectionOfJson) {
  json j{{"a", {{"b", 1}, {"c", json::array({"x", "y"})}}}, {"d", nullptr}};
  EXPECT_EQ(render_text(j), "a.b: 1\na.c[0]: x\na.c[1]: y\nd: null\n");
}

TEST(Golden, ShippedCorpusPasses) {
  GoldenSummary s = golden_file(STATPHASE_GOLDEN_CORPUS);
  EXPECT_GE(s.cases.size(), 10u);
  for (const auto& c : s.cases) EXPECT_TRUE(c.passed) << c.name << ": " << c.diff.dump();
}

TEST(Golden, CorruptedValueFailsWithDiff) {
  std::ifstream in(STATPHASE_GOLDEN_CORPUS);
  json corpus = json::parse(in);
  json one{{"cases", json::array({corpus["cases"][1]})}};
  one["cases"][0]["expect"]["spectrum"]["spectral_poly"] = "g + 1";
  GoldenSummary s = golden(one);
  ASSERT_EQ(s.cases.size(), 1u);
  EXPECT_FALSE(s.passed());
  EXPECT_FALSE(s.cases[0].diff.empty());
}

TEST(Golden, EmptyCorpusPassesWithWarning) {
  GoldenSummary s = golden(json{{"cases", json::array()}});
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.warnings.size(), 1u);
  try {
    golden_file("/nonexistent/corpus.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}

}  // namespace
}  // namespace statphase::cli

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/app.hpp"
#include "cli/emit.hpp"
#include "cli/expression.hpp"
#include "cli/verify.hpp"
#include "cuspval/errors.hpp"
#include "generators.hpp"

namespace cuspval::cli {
namespace {

using cuspval::testing::Gen;
using M = LaurentMonomial;
using P = LaurentPolynomial;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "cuspval");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseExpression, Examples) {
  EXPECT_EQ(parse_rational_function("x^2 - y^3"), RationalFunction(P::cusp(3, 2)));
  EXPECT_EQ(parse_rational_function("x/y"), RationalFunction(P(M{1, -1})));
  EXPECT_EQ(parse_rational_function("(y^3/x^2) * (x/y)^3"), RationalFunction(P(M::x())));
  EXPECT_EQ(parse_rational_function("  3/2*x -  -y "),
            RationalFunction(P(M::x(), Rational(Integer(3), Integer(2))) + P(M::y())));
  EXPECT_EQ(parse_rational_function("x^-2"), RationalFunction(P::constant(1), P(M{2, 0})));
  EXPECT_EQ(parse_rational_function("-x^2"), RationalFunction(-P(M{2, 0})));
}

TEST(ParseExpression, SyntaxErrorsCarryPosition) {
  try {
    parse_expression("x + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_expression(""), ParseError);
  EXPECT_THROW(parse_expression("(x + y"), ParseError);
  EXPECT_THROW(parse_expression("x ^ y"), ParseError);
  EXPECT_THROW(parse_expression("z"), ParseError);
  EXPECT_THROW(parse_expression("x y"), ParseError);
  EXPECT_THROW(parse_expression("x^99999"), ParseError);
}

TEST(ParseExpression, ZeroDenominatorRejectedAtLowering) {
  EXPECT_NO_THROW(parse_expression("x/(y - y)"));
  EXPECT_THROW(parse_rational_function("x/(y - y)"), ParseError);
  EXPECT_THROW(parse_rational_function("(x - x)^-1"), ParseError);
  EXPECT_THROW(parse_rational_function("1/0"), ParseError);
}

TEST(Properties, PrintParseRoundTrip) {
  Gen gen(61);
  for (int i = 0; i < 500; ++i) {
    const RationalFunction r(gen.laurent(5, 9), gen.laurent(5, 9));
    ASSERT_EQ(parse_rational_function(to_string(r)), r) << to_string(r);
    const P p = gen.laurent(6, 20, 6);
    ASSERT_EQ(parse_rational_function(to_string(p)), RationalFunction(p)) << to_string(p);
  }
}

TEST(ParseStreamSpec, Forms) {
  const CFStream s = parse_stream_spec("sqrt2");
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(s.digit(i), i == 0 ? 1 : 2);
  const CFStream t = parse_stream_spec(" [2; 1, (1, 4)] ");
  const std::vector<int> expected{2, 1, 1, 4, 1, 4};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(t.digit(i), expected[i]);
  const CFStream u = parse_stream_spec("[1; (2)]");
  EXPECT_EQ(u.digit(5), 2);
  const CFStream w = parse_stream_spec("[(1, 3)]");
  const std::vector<int> wexp{1, 3, 1, 3};
  for (std::size_t i = 0; i < wexp.size(); ++i) EXPECT_EQ(w.digit(i), wexp[i]);
  EXPECT_THROW(parse_stream_spec("1.41421"), InvalidArgument);
  EXPECT_THROW(parse_stream_spec("[1; 2, 2]"), InvalidArgument);
  EXPECT_THROW(parse_stream_spec("[1; (0)]"), InvalidArgument);
  EXPECT_THROW(parse_stream_spec("[1, 2; (2)]"), InvalidArgument);
}

TEST(EmitJson, CfExample) {
  const Rational r(Integer(24), Integer(7));
  const auto j = to_json(r, cf_expand(r));
  EXPECT_EQ(j["digits"], nlohmann::json::parse("[3,2,3]"));
  EXPECT_EQ(j["alternate"], nlohmann::json::parse("[3,2,2,1]"));
}

TEST(EmitJson, RingGensExample) {
  const auto j = to_json(ring_generators(24, 7));
  EXPECT_EQ(j["u"], "y^24/x^7");
  EXPECT_EQ(j["v"], "x^5/y^17");
  EXPECT_EQ(j["p"], 5);
  EXPECT_EQ(j["q"], 17);
}

TEST(EmitJson, TraceExample) {
  const auto j = to_json(resolve(3, 2));
  EXPECT_EQ(j["count"], 3);
  ASSERT_EQ(j["blow_ups"].size(), 3u);
  EXPECT_EQ(j["blow_ups"][1]["classification"], "TangentialCrossing");
  EXPECT_EQ(j["blow_ups"][2]["children"][0]["chart"]["exceptional"], "(x/y)^6*(y^3/x^2)^2");
  EXPECT_EQ(j["blow_ups"][2]["children"][0]["chart"]["proper"], "1 - (y^3/x^2)");
}

TEST(EmitJson, PathSchemaAndKeyOrder) {
  const std::string s = emit_json(to_json(positive_path(MonomialValuation::rational(24, 7))));
  const auto j = nlohmann::json::parse(s);
  EXPECT_EQ(j["status"], "complete");
  ASSERT_EQ(j["vertices"].size(), 8u);
  EXPECT_EQ(j["vertices"][7]["f"], "y^7/x^2");
  EXPECT_EQ(j["vertices"][7]["g"], "x^5/y^17");
  EXPECT_LT(s.find("\"status\""), s.find("\"vertices\""));
}

TEST(EmitJson, LargeIntegersAreStrings) {
  EXPECT_EQ(json_integer(Integer(42)), 42);
  EXPECT_EQ(json_integer(Integer(1) << 70), "1180591620717411303424");
}

TEST(EmitDot, PathExamples) {
  const std::string d32 = emit_dot(positive_path(MonomialValuation::rational(3, 2)));
  EXPECT_NE(d32.find("k[x, y]"), std::string::npos);
  EXPECT_NE(d32.find("k[y, x/y]"), std::string::npos);
  EXPECT_NE(d32.find("k[x/y, y^2/x]"), std::string::npos);
  EXPECT_EQ(d32.find("truncated"), std::string::npos);

  const std::string d247 = emit_dot(positive_path(MonomialValuation::rational(24, 7)));
  std::size_t bold_nodes = 0;
  std::istringstream lines(d247);
  for (std::string line; std::getline(lines, line);) {
    bold_nodes += line.find("label=") != std::string::npos && line.find("style=bold") != std::string::npos;
  }
  EXPECT_EQ(bold_nodes, 8u);
  EXPECT_NE(d247.find("k[y^7/x^2, x^5/y^17]"), std::string::npos);

  const std::string dt = emit_dot(positive_path(MonomialValuation::stream(CFStream::sqrt2()), 4));
  EXPECT_NE(dt.find("truncated"), std::string::npos);
  EXPECT_NE(emit_dot(PositivePath{{}, PathStatus::truncated}).find("truncated"), std::string::npos);
}

TEST(Emitters, Deterministic) {
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(emit_dot(resolve(24, 7)), emit_dot(resolve(24, 7)));
    EXPECT_EQ(emit_json(to_json(resolve(24, 7))), emit_json(to_json(resolve(24, 7))));
    EXPECT_EQ(emit_json(to_json(run_verify(12, 3))), emit_json(to_json(run_verify(12, 1))));
  }
}

TEST(RunVerify, Examples) {
  const VerifyReport r25 = run_verify(25);
  EXPECT_TRUE(r25.ok());
  EXPECT_EQ(r25.theorem_passed, r25.pairs);
  const VerifyReport r3 = run_verify(3);
  EXPECT_EQ(r3.pairs, 1u);
  EXPECT_TRUE(r3.ok());
  const VerifyReport r2 = run_verify(2);
  EXPECT_EQ(r2.pairs, 0u);
  EXPECT_TRUE(r2.ok());
}

TEST(RunCli, CommandsAndExitCodes) {
  const CliRun cf = run({"cf", "24/7", "--format", "json"});
  EXPECT_EQ(cf.code, 0);
  EXPECT_EQ(nlohmann::json::parse(cf.out)["digits"], nlohmann::json::parse("[3,2,3]"));

  EXPECT_EQ(run({"path", "24", "7", "--format", "dot"}).code, 0);
  EXPECT_EQ(run({"path", "--stream", "sqrt2", "--max-steps", "12"}).code, 0);
  EXPECT_EQ(run({"ringgens", "24", "7"}).code, 0);
  EXPECT_EQ(run({"member", "x/y", "--a", "3", "--b", "2"}).code, 0);
  EXPECT_EQ(run({"member", "y/x", "--stream", "sqrt2", "--format", "json"}).code, 0);
  EXPECT_EQ(run({"resolve", "3", "2", "--trace"}).code, 0);
  EXPECT_EQ(run({"verify", "--max", "10"}).code, 0);

  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"cf", "24/7", "--bogus"}).code, 1);
  EXPECT_EQ(run({"cf", "1/0"}).code, 1);
  EXPECT_EQ(run({"member", "x +", "--a", "3", "--b", "2"}).code, 1);
  EXPECT_EQ(run({"resolve", "4", "2"}).code, 1);
  EXPECT_EQ(run({"ringgens", "24", "7", "--format", "dot"}).code, 1);
  EXPECT_EQ(run({"path", "3", "2", "--stream", "sqrt2"}).code, 1);
  EXPECT_EQ(run({"path", "--stream", "1.414"}).code, 1);
}

TEST(RunCli, IndecisiveExitCode) {
  // nu(x^144 / y^233) = 144 * phi - 233; its sign needs more than 12 refinements.
  const CliRun tight = run({"member", "x^144/y^233", "--stream", "[(1)]", "--max-iters", "12"});
  EXPECT_EQ(tight.code, 3) << tight.err;
  const CliRun ample = run({"member", "x^144/y^233", "--stream", "[(1)]"});
  EXPECT_EQ(ample.code, 0) << ample.err;
}

TEST(RunCli, OutFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "cuspval_test_out.json";
  std::filesystem::remove(path);
  const CliRun r = run({"resolve", "3", "2", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["count"], 3);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace cuspval::cli

#include "grassline/tools/cli.hpp"
#include "grassline/tools/selftest.hpp"
#include "support.hpp"

using namespace grassline::tools;
using nlohmann::json;

namespace {

Report run(const std::vector<std::string>& args) { return execute(parse(args)); }

}  // namespace

TEST(CliParse, Commands) {
  const Request r = parse({"stratum", "--gamma", R"([["1","0"],["t^-1","1"]])"});
  EXPECT_EQ(r.command, "stratum");
  EXPECT_EQ(r.payload["gamma"][1][0], "t^-1");
  EXPECT_FALSE(r.timing);
  EXPECT_THROW(parse({"no-such-command"}), UsageError);
  EXPECT_THROW(parse({"stratum"}), UsageError);
  EXPECT_THROW(parse({"stratum", "--gamma", "[[\"1\""}), UsageError);
  EXPECT_THROW(parse({"--help"}), HelpRequested);
  for (const auto& name : {"stratum", "classify", "factorize", "quad", "triple", "xi", "dims", "extract",
                           "adhm-sample", "adhm-to-loop", "selftest"})
    EXPECT_NE(std::find(command_names().begin(), command_names().end(), name), command_names().end()) << name;
}

TEST(CliParse, Bounds) {
  const Bounds b = parse_bounds("split_max_orders=12,sample_retries=3");
  EXPECT_EQ(b.split_max_orders, 12);
  EXPECT_EQ(b.sample_retries, 3);
  EXPECT_THROW(parse_bounds("unknown=1"), UsageError);
  EXPECT_THROW(parse_bounds("split_max_orders=x"), UsageError);
  const Request env = parse({"xi", "--lambda", "[1,-1]"}, std::string("sample_retries=5"));
  EXPECT_EQ(env.bounds.sample_retries, 5);
  const Request both = parse({"--bounds", "sample_retries=9", "xi", "--lambda", "[1,-1]"}, std::string("sample_retries=5"));
  EXPECT_EQ(both.bounds.sample_retries, 9);
}

TEST(CliExecute, Stratum) {
  const Report rep = run({"stratum", "--gamma", R"([["1","0"],["t^-1","1"]])"});
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.result["lambda"], json::array({1, -1}));
  EXPECT_EQ(exit_code(rep), 0);
}

TEST(CliExecute, Xi) {
  const Report rep = run({"xi", "--lambda", "[3,0,0,-3]"});
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.result, json::parse("[[2,0],[0,2]]"));
  EXPECT_TRUE(run({"xi", "--lambda", "[2,-2]"}).result.empty());
}

TEST(CliExecute, ModuleErrorsExitOne) {
  const Report rep = run({"stratum", "--gamma", R"([["1","t"],["0","1"]])"});
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.error_code, "NotLoopElement");
  EXPECT_EQ(exit_code(rep), 1);
  const json out = json::parse(emit(rep));
  EXPECT_TRUE(out["result"].is_null());
  EXPECT_EQ(out["error"]["code"], "NotLoopElement");
}

TEST(CliExecute, MalformedRationalIsUsageError) {
  EXPECT_THROW(run({"stratum", "--gamma", R"([["1/0","0"],["0","1"]])"}), UsageError);
  EXPECT_THROW(run({"xi", "--lambda", R"(["a"])"}), UsageError);
  const Report bad = run({"xi", "--lambda", "[1,2]"});
  EXPECT_EQ(bad.error_code, "InvalidCoweight");
  EXPECT_EQ(exit_code(bad), 1);
}

TEST(CliExecute, SampleAndLoopRoundTrip) {
  const Report s = run({"adhm-sample", "--lambda", "[2,0,-2]", "--seed", "7"});
  ASSERT_TRUE(s.ok) << emit(s);
  const Report g = run({"adhm-to-loop", "--datum", s.result["datum"].dump()});
  ASSERT_TRUE(g.ok) << emit(g);
  const Report st = run({"stratum", "--gamma", g.result["gamma"].dump()});
  EXPECT_EQ(st.result["lambda"], json::array({2, 0, -2}));
}

TEST(CliExecute, RequestJson) {
  const Request r = parse_request_json(json{{"command", "dims"}, {"payload", {{"lambda", json::array({3, 0, 0, -3})}}}});
  const Report rep = execute(r);
  EXPECT_TRUE(rep.ok);
  EXPECT_THROW(parse_request_json(json{{"payload", {{"lambda", json::array({1})}}}}), UsageError);
  EXPECT_THROW(parse_request_json(json{{"command", "dims"}}), UsageError);
}

TEST(CliEmit, Deterministic) {
  const std::vector<std::string> args{"adhm-sample", "--lambda", "[2,1,-1,-2]", "--seed", "3"};
  const std::string a = emit(run(args));
  const std::string b = emit(run(args));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
  EXPECT_EQ(a.find("timing"), std::string::npos);
  const Report timed = run({"--timing", "xi", "--lambda", "[1,-1]"});
  EXPECT_TRUE(json::parse(emit(timed)).contains("timing"));
}

TEST(CliExecute, SelftestSuite) {
  const Report rep = run({"selftest", "--suite", "combinatorics"});
  EXPECT_TRUE(rep.ok);
  ASSERT_EQ(rep.summary.size(), 1u);
  EXPECT_EQ(rep.summary.front().rfind("[PASS]", 0), 0u);
  EXPECT_THROW(run({"selftest", "--suite", "bogus"}), UsageError);
}

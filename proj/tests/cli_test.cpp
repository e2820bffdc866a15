#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace laguerre::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, {in, out, err});
  return {code, out.str(), err.str()};
}

const char* kSigma = "4 9 2 11 5 10 1 3 6 8 7 12 16 17 13 14 15";

TEST(Cli, Stats) {
  const Result r = call({"stats", "3", "1", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out,
            "recp: {1}\nrecl: {3}\narecp: {2,3}\narecl: {1,2}\nerecp: {1}\nerecl: {3}\nrar: {}\n"
            "excp: {1}\nexcl: {3}\ncyc: {3}\ncpeak: {3}\ncval: {1}\ncdrise: {}\ncdfall: {2}\nfix: {}\n");
}

TEST(Cli, StatsFromStdinAsJson) {
  const Result r = call({"--format", "json", "stats"}, kSigma);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cyc"], nlohmann::json::array({5, 10, 11, 12, 17}));
  EXPECT_EQ(j["rar"], nlohmann::json::array({12}));
}

TEST(Cli, FormatOptionMayFollowSubcommand) {
  const Result r = call({"phi", "2", "1", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["images"], nlohmann::json::array({2, 1}));
}

TEST(Cli, PhiAndPhiCap) {
  Result r = call({"phi"}, kSigma);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "4 9 2 11 1 10 7 8 3 5 6 12 16 17 15 13 14\n");
  r = call({"phicap"}, kSigma);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "4 11 2 9 1 10 7 8 5 3 6 12 17 16 15 14 13\n");
}

TEST(Cli, EncodeDecodeIdentity) {
  const Result enc = call({"encode", "1", "2", "3", "4", "5"});
  ASSERT_EQ(enc.code, kOk) << enc.err;
  EXPECT_EQ(enc.out, "5\n1 LC - 1\n2 LC - 1\n3 LC - 1\n4 LC - 1\n5 LC - 1\n");
  const Result dec = call({"decode"}, enc.out);
  ASSERT_EQ(dec.code, kOk) << dec.err;
  EXPECT_EQ(dec.out, "1 2 3 4 5\n");
  const Result dash = call({"decode", "-"}, enc.out);
  EXPECT_EQ(dash.out, dec.out);
}

TEST(Cli, EncodeRenderAndJson) {
  Result r = call({"encode", "--render", "2", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("h=1 |"), std::string::npos);
  r = call({"--format", "json", "encode", "2", "1"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["steps"][0]["kind"], "U");
  EXPECT_TRUE(j["steps"][0]["xi"].is_null());
  EXPECT_EQ(j["steps"][1]["eta"], 1);
}

TEST(Cli, HistoryMapsFromFile) {
  const std::string path = ::testing::TempDir() + "/sigma_history.txt";
  const Result enc = call({"encode"}, kSigma);
  {
    std::ofstream f(path);
    f << enc.out;
  }
  const Result a = call({"rho1", path});
  ASSERT_EQ(a.code, kOk) << a.err;
  const Result back = call({"rho1-inv"}, a.out);
  ASSERT_EQ(back.code, kOk) << back.err;
  EXPECT_EQ(back.out, enc.out);
  const Result b = call({"rho2", path});
  ASSERT_EQ(b.code, kOk) << b.err;
  EXPECT_EQ(call({"rho2"}, b.out).out, enc.out);
  EXPECT_NE(b.out.find("\n9 D 2 2\n"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, Cf) {
  Result r = call({"cf", "stieltjes", "--order", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "# mu_0\n1\n# mu_1\n1 * x^1\n# mu_2\n1 * x^2\n1 * x^1 y^1\n");
  const Result brute = call({"cf", "stieltjes", "--order", "2", "--source", "cyc"});
  EXPECT_EQ(brute.out, r.out);
  r = call({"cf", "jacobi", "--order", "3", "--source", "brute", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["moments"].size(), 4u);
  EXPECT_EQ(call({"cf", "jacobi", "--source", "arec"}).code, kUsage);
  EXPECT_EQ(call({"cf", "stieltjes", "--source", "brute"}).code, kUsage);
  EXPECT_EQ(call({"cf", "laurent"}).code, kUsage);
}

TEST(Cli, Verify) {
  Result r = call({"verify", "theorem1", "--n-max", "6"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cases_run"], 874);
  EXPECT_EQ(j["status"], "passed");

  r = call({"verify", "roundtrip", "--n-max", "0"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["cases_run"], 1);

  r = call({"verify", "all", "--n-max", "3", "--workers", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["checks"].size(), 8u);
}

TEST(Cli, VerifyUsageErrors) {
  Result r = call({"verify", "bogus"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("unknown check"), std::string::npos);
  r = call({"verify", "roundtrip", "--n-max", "11"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("refused"), std::string::npos);
}

TEST(Cli, BadInput) {
  Result r = call({"stats", "1", "1"});
  EXPECT_EQ(r.code, kBadInput);
  EXPECT_NE(r.err.find("at 2:"), std::string::npos) << r.err;
  EXPECT_EQ(call({"decode"}, "1\n1 U - -\n").code, kBadInput);
  EXPECT_EQ(call({"decode"}, "1\n1 X - -\n").code, kBadInput);
  EXPECT_EQ(call({"rho1", "/nonexistent/history.txt"}).code, kBadInput);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(call({"--format", "xml", "stats", "1"}).code, kUsage);
  const Result help = call({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace laguerre::cli

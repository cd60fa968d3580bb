#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"

using alterfold::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TvOnSphere) {
  const auto r = call({"tv", "--category", "builtin:fibonacci", "--triangulation", "census:s3_2tet"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.2763932023"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"tv", "--category", "builtin:fibonacci"}).code, 2);
  EXPECT_EQ(call({"tv", "--category", "builtin:nope", "--triangulation", "census:s3_2tet"}).code, 2);
  EXPECT_EQ(call({"tv", "--category", "builtin:fibonacci", "--triangulation", "census:nope"}).code, 2);
  EXPECT_EQ(call({"rt", "--category", "builtin:fibonacci"}).code, 2);
  const auto r = call({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, RtAndCenter) {
  auto r = call({"rt", "--category", "builtin:trivial", "--lens", "5", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1.0000000000"), std::string::npos);
  r = call({"center", "--category", "builtin:fibonacci", "--emit", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("results"));
  EXPECT_TRUE(j.contains("fingerprint"));
}

TEST(Cli, JsonResultsAreReproducible) {
  const std::vector<std::string> args{"--emit", "json", "verify", "--category", "builtin:fibonacci", "--suite",
                                      "tvrt"};
  const auto a = call(args), b = call(args);
  ASSERT_EQ(a.code, 0) << a.err;
  const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  EXPECT_EQ(ja["results"].dump(), jb["results"].dump());
  EXPECT_EQ(ja["fingerprint"], jb["fingerprint"]);
}

TEST(Cli, VerifySuites) {
  for (const char* s : {"pentagon", "killing", "tvrt", "pachner"})
    EXPECT_EQ(call({"verify", "--category", "builtin:vec_z2:2:0", "--suite", s}).code, 0) << s;
  EXPECT_EQ(call({"verify", "--category", "builtin:fibonacci", "--suite", "equivariance", "--range", "1"}).code, 0);
  EXPECT_EQ(call({"verify", "--category", "builtin:fibonacci", "--suite", "bogus"}).code, 2);
}

TEST(Cli, FailedVerificationExitsOne) {
  // a perturbed F-symbol breaks the pentagon
  const std::string path = testing::TempDir() + "broken.fusion";
  {
    std::ofstream f(path);
    f << alterfold::serialize_category(*alterfold::builtin_category("fibonacci"));
  }
  EXPECT_EQ(call({"verify", "--category", "file:" + path, "--suite", "pentagon"}).code, 0);
  std::string text;
  {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  // scale the last F line's real part
  const auto pos = text.rfind("\nF ");
  ASSERT_NE(pos, std::string::npos);
  const auto end = text.find('\n', pos + 1);
  std::istringstream line(text.substr(pos + 3, end - pos - 3));
  std::vector<std::string> tok;
  for (std::string t; line >> t;) tok.push_back(t);
  ASSERT_GE(tok.size(), 8u);
  tok[tok.size() - 2] = std::to_string(std::stod(tok[tok.size() - 2]) * 1.1 + 0.05);
  std::string rebuilt = "\nF";
  for (const auto& t : tok) rebuilt += " " + t;
  text = text.substr(0, pos) + rebuilt + text.substr(end);
  {
    std::ofstream f(path);
    f << text;
  }
  EXPECT_EQ(call({"verify", "--category", "file:" + path, "--suite", "pentagon"}).code, 1);
}

TEST(Cli, ToleranceOverride) {
  setenv("ALTERFOLD_TOL", "1e-3", 1);
  const auto cat = alterfold::cli::resolve_category("builtin:fibonacci");
  unsetenv("ALTERFOLD_TOL");
  EXPECT_DOUBLE_EQ(cat->tol, 1e-3);
  EXPECT_EQ(alterfold::cli::fingerprint(*cat).size(), 16u);
}

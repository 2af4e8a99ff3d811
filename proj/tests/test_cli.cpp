#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "burnside/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = burnside::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST(Cli, ExponentOfQuaternionEight) {
  const auto r = run({"exponent", "Q8", "--family", "ea"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "e = 4")) << r.out;
  EXPECT_NE(r.out.find("closed form: 2 (case b, quaternion)"), std::string::npos);
}

TEST(Cli, ExponentOfElementaryAbelian) {
  const auto r = run({"exponent", "EA(3,2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "e = 1")) << r.out;
}

TEST(Cli, ExponentOfCyclicEight) {
  const auto r = run({"exponent", "C(2^3)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "e = 4")) << r.out;
  EXPECT_NE(r.out.find("case a"), std::string::npos);
}

TEST(Cli, ExponentCertificates) {
  const auto r = run({"exponent", "C8", "--certify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("divisor 1: violated"), std::string::npos);
  EXPECT_NE(r.out.find("divisor 2: violated"), std::string::npos);
  EXPECT_EQ(r.out.find("divisor 4:"), std::string::npos);
}

TEST(Cli, ExponentFamilies) {
  EXPECT_TRUE(has_line(run({"exponent", "C8", "--family", "cyclic"}).out, "e = 1"));
  EXPECT_TRUE(has_line(run({"exponent", "D8", "--family", "all"}).out, "e = 1"));
  EXPECT_EQ(run({"exponent", "D8", "--family", "abelian"}).code, 2);
}

TEST(Cli, ExponentOfNonPGroupHasNoCaseLabel) {
  const auto r = run({"exponent", "C6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("closed form"), std::string::npos);
}

TEST(Cli, LatticeCensus) {
  const auto r = run({"lattice", "Q8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("6 subgroups in 6 classes"), std::string::npos);

  const auto j = run({"lattice", "D8", "--json"});
  ASSERT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["command"], "lattice");
  EXPECT_EQ(doc["group_spec"], "D8");
  ASSERT_EQ(doc["payload"].size(), 8U);
  for (std::size_t i = 0; i < doc["payload"].size(); ++i) EXPECT_EQ(doc["payload"][i]["class_index"], i);
  EXPECT_EQ(doc["payload"][0]["order"], 1);
  EXPECT_EQ(doc["payload"][7]["order"], 8);
  EXPECT_EQ(doc.dump(2) + "\n", j.out);  // sorted keys, stable formatting
}

TEST(Cli, MarksJson) {
  const auto r = run({"marks", "C4", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["payload"]["marks"], nlohmann::json::parse("[[4,2,1],[0,2,1],[0,0,1]]"));
  EXPECT_EQ(doc["payload"]["class_orders"], nlohmann::json::parse("[1,2,4]"));
  EXPECT_EQ(run({"marks", "C4"}).code, 0);
}

TEST(Cli, MemberReportsBothRoutes) {
  const auto bad = run({"member", "C2", "--vector", "1,0"});
  EXPECT_EQ(bad.code, 0);
  EXPECT_NE(bad.out.find("dress congruences: not a member"), std::string::npos);
  EXPECT_NE(bad.out.find("marks inversion:   not a member"), std::string::npos);
  EXPECT_NE(bad.out.find("coefficients: 1/2 0"), std::string::npos);
  EXPECT_NE(bad.out.find("first violated congruence: U-class 0 in V-class 1, index 2, sum 1, residue 1"),
            std::string::npos);

  const auto good = run({"member", "Q8", "--vector", "4,4,0,0,0,0", "--json"});
  ASSERT_EQ(good.code, 0);
  const auto doc = nlohmann::json::parse(good.out);
  EXPECT_EQ(doc["payload"]["dress_member"], true);
  EXPECT_EQ(doc["payload"]["marks_member"], true);
  EXPECT_EQ(doc["payload"]["coefficients"], nlohmann::json::parse(R"(["0","1","0","0","0","0"])"));
  EXPECT_TRUE(doc["payload"]["first_violation"].is_null());
}

TEST(Cli, MemberDimensionMismatchIsDomainError) {
  const auto r = run({"member", "C2", "--vector", "1,0,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"member", "C2", "--vector", "1,x"}).code, 1);
}

TEST(Cli, VerifyMainTheoremExitCodes) {
  const auto small = run({"verify-main-theorem", "--max-order", "4"});
  EXPECT_EQ(small.code, 0);
  EXPECT_NE(small.out.find("5 groups, 0 disagreements"), std::string::npos);

  const auto r = run({"verify-main-theorem", "--max-order", "16", "--json"});
  EXPECT_EQ(r.code, 3);
  const auto doc = nlohmann::json::parse(r.out);
  bool saw_sd16 = false;
  for (const auto& row : doc["payload"]["rows"]) {
    EXPECT_EQ(row["routes_agree"], true);
    if (row["group"] == "SD16") {
      saw_sd16 = true;
      EXPECT_EQ(row["closed_form"], 4);
    }
  }
  EXPECT_TRUE(saw_sd16);
  EXPECT_GT(doc["payload"]["disagreements"].get<int>(), 0);
}

TEST(Cli, CatalogListing) {
  const auto r = run({"catalog", "--max-order", "8", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["payload"].size(), 13U);
  EXPECT_EQ(run({"catalog"}).code, 0);
}

TEST(Cli, ErrorsAndUsage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"exponent"}).code, 2);
  EXPECT_EQ(run({"verify-main-theorem"}).code, 2);

  const auto bad_spec = run({"exponent", "SD(8)"});
  EXPECT_EQ(bad_spec.code, 1);
  EXPECT_EQ(std::count(bad_spec.err.begin(), bad_spec.err.end(), '\n'), 1);
  EXPECT_EQ(run({"lattice", "Z5"}).code, 1);
  EXPECT_EQ(run({"lattice", "C512"}).code, 1);  // above the enumeration cap

  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, LatticeCapEnvironmentOverride) {
  ::setenv(burnside::cli::kLatticeCapEnv, "8", 1);
  EXPECT_EQ(run({"lattice", "C16"}).code, 1);
  EXPECT_EQ(run({"lattice", "C8"}).code, 0);
  ::setenv(burnside::cli::kLatticeCapEnv, "nope", 1);
  EXPECT_EQ(run({"lattice", "C8"}).code, 1);
  ::unsetenv(burnside::cli::kLatticeCapEnv);
  EXPECT_EQ(run({"lattice", "C16"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"lattice", "D8xC2", "--json"}, {"marks", "SD16"}, {"exponent", "ES+(3)", "--certify"},
        {"verify-main-theorem", "--max-order", "27"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

// Runs the built `multree` binary end to end.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"

namespace fs = std::filesystem;
using namespace multree::test;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("multree_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int run(const std::string& args) const {
    const std::string cmd = std::string(MULTREE_CLI) + " " + args + " > " + path("stdout") + " 2> " + path("stderr");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_F(Cli, ReduceFixtures) {
  write("in.nwk", std::string(kE1) + "\n" + kE2 + "\n(a,b,c,d);\n");
  ASSERT_EQ(run("reduce --in " + path("in.nwk") + " --out " + path("out.nwk") + " --singly --report " +
                path("r.csv")),
            0);
  EXPECT_EQ(read("out.nwk"), "((a,f),(d,e),b,c);\n((a,b,f),(c,d,f));\n;\n");
  EXPECT_EQ(read("out.nwk.singly"), "((a,f),(d,e),b,c);\n((a,b),(c,d));\n;\n");
  const std::string report = read("r.csv");
  EXPECT_NE(report.find("\n0,1,SinglyMRF,"), std::string::npos);
  EXPECT_NE(report.find("\n1,2,SecondStepSingly,"), std::string::npos);
  EXPECT_NE(report.find("\n2,3,NoInformation,"), std::string::npos);
}

TEST_F(Cli, EmptyInput) {
  write("in.nwk", "");
  ASSERT_EQ(run("reduce --in " + path("in.nwk") + " --out " + path("out.nwk") + " --report " + path("r.json") +
                " --format json"),
            0);
  EXPECT_EQ(read("out.nwk"), "");
  EXPECT_NE(read("r.json").find("\"rows\": []"), std::string::npos);
}

TEST_F(Cli, LenientAndStrict) {
  write("in.nwk", std::string(kE1) + "\n(a,,b);\n" + kE2 + "\n");
  EXPECT_EQ(run("reduce --in " + path("in.nwk") + " --out " + path("out.nwk")), 0);
  EXPECT_EQ(count_lines(read("out.nwk")), 2u);
  EXPECT_NE(read("stderr").find(":2:4: warning"), std::string::npos);
  EXPECT_NE(run("reduce --strict --in " + path("in.nwk") + " --out " + path("out.nwk")), 0);
  EXPECT_NE(read("stderr").find(":2:4: empty subtree"), std::string::npos);
}

TEST_F(Cli, ThreadsGiveIdenticalReports) {
  std::string text;
  for (int i = 0; i < 30; ++i) text += std::string(i % 2 ? kE1 : kE2) + "\n";
  write("in.nwk", text);
  ASSERT_EQ(run("stats --in " + path("in.nwk") + " --threads 1 --report " + path("a.csv")), 0);
  ASSERT_EQ(run("stats --in " + path("in.nwk") + " --threads 4 --report " + path("b.csv")), 0);
  EXPECT_EQ(read("a.csv"), read("b.csv"));
  EXPECT_EQ(count_lines(read("a.csv")), 1u + 30u + 10u);
}

TEST_F(Cli, VerifyGenerated) {
  ASSERT_EQ(run("verify --generate 50 --seed 42 --max-leaves 10"), 0);
  EXPECT_NE(read("stdout").find("information_preserved"), std::string::npos);
}

TEST_F(Cli, VerifyFile) {
  write("in.nwk", std::string(kE2) + "\n");
  ASSERT_EQ(run("verify --in " + path("in.nwk")), 0);
}

TEST_F(Cli, VerifyGuardsOracleLimit) {
  EXPECT_EQ(run("verify --generate 1 --oracle-max-leaves 20"), 2);
}

TEST_F(Cli, Bench) {
  ASSERT_EQ(run("bench --sizes 50,100 --multiplicities 1,2 --min-seconds 0 --trees 1"), 0);
  const std::string out = read("stdout");
  EXPECT_EQ(out.rfind("leaves,multiplicity,", 0), 0u);
  EXPECT_NE(out.find("# loglog_slope,multiplicity=2,"), std::string::npos);
}

TEST_F(Cli, MissingSubcommand) { EXPECT_NE(run(""), 0); }

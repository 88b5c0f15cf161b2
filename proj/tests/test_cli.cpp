#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "msulab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = msulab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("msulab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, MeasureTable) {
  {
    std::ofstream f(path("t.csv"));
    f << "f1,f2,clase\na,s,p\nb,s,q\nb,t,p\nb,t,q\na,s,p\na,s,q\na,t,p\na,t,q\n";
  }
  const auto r = run({"measure", path("t.csv"), "--msu", "f1,f2,clase"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("msu(f1,f2,clase) = 0.103"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("heuristic m = 80"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("smaller than the heuristic"), std::string::npos);

  EXPECT_EQ(run({"measure", path("t.csv"), "--entropy", "f1,f2,clase"}).out.substr(0, 30),
            "entropy(f1,f2,clase) = 2.75000");
  EXPECT_EQ(run({"measure", path("t.csv"), "--su", "f1,clase"}).code, 0);
  EXPECT_EQ(run({"measure", path("t.csv"), "--ig", "f1,clase"}).out.substr(0, 26),
            "ig(f1,clase) = 0.048795\nm ");
}

TEST_F(Cli, MeasureUsageErrors) {
  {
    std::ofstream f(path("t.csv"));
    f << "a,b\n1,2\n";
  }
  EXPECT_EQ(run({"measure", path("t.csv"), "--su", "a"}).code, 2);
  EXPECT_EQ(run({"measure", path("t.csv"), "--msu", "a"}).code, 2);
  EXPECT_EQ(run({"measure", path("t.csv"), "--su", "a,b", "--msu", "a,b"}).code, 2);
  EXPECT_EQ(run({"measure", path("t.csv")}).code, 2);
  EXPECT_EQ(run({"measure", path("missing.csv"), "--su", "a,b"}).code, 1);
  const auto unknown = run({"measure", path("t.csv"), "--su", "a,zz"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("zz"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(Cli, GenerateIsDeterministic) {
  const auto a = run({"generate", "--rule", "mk", "--cards", "2,4", "--m", "50", "--seed", "3"});
  const auto b = run({"generate", "--rule", "mk", "--cards", "2,4", "--m", "50", "--seed", "3"});
  const auto c = run({"generate", "--rule", "mk", "--cards", "2,4", "--m", "50", "--seed", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(a.out.substr(0, 12), "f1,f2,clase\n");
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 51);
}

TEST_F(Cli, GenerateThenMeasure) {
  ASSERT_EQ(run({"generate", "--rule", "xor", "--m", "20000", "--seed", "1", "--out",
                 path("x.csv")})
                .code,
            0);
  const auto r = run({"measure", path("x.csv"), "--msu", "f1,f2,clase"});
  ASSERT_EQ(r.code, 0) << r.err;
  const double v = std::stod(r.out.substr(r.out.find('=') + 1));
  EXPECT_NEAR(v, 0.3568, 0.01);
  EXPECT_NE(r.out.find("meets the heuristic"), std::string::npos);
  EXPECT_EQ(run({"generate", "--rule", "mk", "--m", "10"}).code, 2);
  EXPECT_EQ(run({"generate", "--rule", "other", "--cards", "2", "--m", "10"}).code, 2);
  EXPECT_EQ(run({"generate", "--rule", "xor", "--m", "10", "--noise", "0.7"}).code, 1);
}

TEST_F(Cli, ExperimentPresetAndConfig) {
  const auto r = run({"experiment", "fig-b1", "--replicates", "5", "--values", "8,9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "sweep_value,measure_name,mean,stddev,n_replicates,sample_size_used");
  EXPECT_NE(r.out.find("\n8,msu_xor,"), std::string::npos);
  EXPECT_NE(r.out.find("\n9,su_xor_2,"), std::string::npos);
  EXPECT_EQ(r.out, run({"experiment", "fig-b1", "--replicates", "5", "--values", "8,9",
                        "--serial"})
                       .out);
  {
    std::ofstream f(path("c.json"));
    f << R"({"preset": "fig-b1", "replicates": 5, "sweep": {"axis": "sample_size", "values": [8, 9]}})";
  }
  const auto from_file = run({"experiment", path("c.json"), "--out", path("curve.csv")});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  std::ifstream in(path("curve.csv"));
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), r.out);
  EXPECT_EQ(run({"experiment", "no-such-preset"}).code, 1);
}

TEST_F(Cli, ExperimentReportsSkippedPoints) {
  const auto r = run({"experiment", "fig-h", "--replicates", "2", "--values", "2,19"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("19 skipped"), std::string::npos) << r.err;
  EXPECT_NE(r.out.find("\n2,msu_mk,"), std::string::npos);
  EXPECT_EQ(r.out.find("\n19,"), std::string::npos);
}

TEST_F(Cli, Recommend) {
  const auto r = run({"recommend", "--cards", "2,2", "--class-card", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("multivariate_cardinality 8\n"), std::string::npos);
  EXPECT_NE(r.out.find("heuristic_m 80\n"), std::string::npos);
  EXPECT_NE(r.out.find("chi2_m_star 99\n"), std::string::npos);
  EXPECT_NE(r.out.find("critical_value 14.067140\n"), std::string::npos);
  EXPECT_EQ(run({"recommend", "--cards", "0,2"}).code, 2);
  EXPECT_EQ(run({"recommend", "--cards", "2", "--alpha", "1.5"}).code, 2);
}

TEST_F(Cli, Chi2Scan) {
  const auto r = run({"chi2-scan"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n8,7,0.05,"), std::string::npos);
  EXPECT_NE(r.out.find(",99,"), std::string::npos);
  const auto trace = run({"chi2-scan", "--trace", "8", "--m-max", "100"});
  EXPECT_NE(trace.out.find("\n98,14,"), std::string::npos) << trace.out;
  EXPECT_NE(trace.out.find(",1\n"), std::string::npos);
  EXPECT_EQ(run({"chi2-scan", "--k", "1"}).code, 2);
}

TEST_F(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chi2-scan"), std::string::npos);
}

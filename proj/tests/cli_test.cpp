#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pdci/harness/dataset_io.hpp"
#include "pdci/harness/synthetic.hpp"
#include "pdci/oracle.hpp"

namespace pdci::cli {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pdci_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    data_ = harness::gaussian_mixture(300, 6, {.clusters = 3}, 4);
    queries_ = harness::uniform_cube(4, 6, 5);
    harness::write_fvecs(dir_ / "data.fvecs", data_);
    harness::write_text(dir_ / "queries.txt", queries_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run_cli(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  Dataset data_, queries_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, BuildThenQueryAnswersExactlyAtExhaustiveBudgets) {
  ASSERT_EQ(run_cli({"build", "--data", path("data.fvecs"), "--format", "fvecs", "--m", "3", "--L", "2", "--seed",
                     "9", "--out", path("index.json")}),
            kExitOk)
      << err_.str();
  EXPECT_TRUE(fs::exists(dir_ / "index.json"));

  ASSERT_EQ(run_cli({"query", "--index", path("index.json"), "--queries", path("queries.txt"), "--queries-format",
                     "txt", "--k", "3", "--k0", "300", "--k1", "901", "--mode", "prioritized", "--report",
                     path("results.tsv")}),
            kExitOk)
      << err_.str();

  // Compare against the oracle over the float-rounded data the index was built from.
  const Dataset stored = harness::load_dataset(dir_ / "data.fvecs", harness::DataFormat::kFvecs);
  std::ifstream in(dir_ / "results.tsv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "query\trank\tid\tdistance\tdist_evals\tprojections_visited\ttruncated");
  std::size_t q = 0, rank = 0, truncated = 0;
  PointId id = 0;
  double distance = 0, evals = 0, visits = 0;
  std::size_t rows = 0;
  while (in >> q >> rank >> id >> distance >> evals >> visits >> truncated) {
    const auto truth = brute_force_knn(stored, queries_.row(q), 3);
    EXPECT_EQ(id, truth[rank - 1].id);
    EXPECT_NEAR(distance, truth[rank - 1].distance, 1e-9);
    EXPECT_EQ(truncated, 0u);
    ++rows;
  }
  EXPECT_EQ(rows, 4u * 3u);
}

TEST_F(Cli, QueryRejectsOutOfRangeBudgets) {
  ASSERT_EQ(run_cli({"build", "--data", path("data.fvecs"), "--format", "fvecs", "--out", path("index.json")}),
            kExitOk);
  EXPECT_EQ(run_cli({"query", "--index", path("index.json"), "--queries", path("queries.txt"), "--queries-format",
                     "txt", "--k", "5", "--k0", "2", "--k1", "50", "--report", path("r.tsv")}),
            kExitInvalidArguments);
  EXPECT_NE(err_.str().find("k0"), std::string::npos);
}

TEST_F(Cli, BenchWritesReportAndComparison) {
  EXPECT_EQ(run_cli({"bench", "--data", path("data.fvecs"), "--format", "fvecs", "--splits", "2", "--queries", "5",
                     "--k", "3", "--m", "3", "--L", "2", "--seed", "1", "--c0", "0.5,1,2", "--c1", "1",
                     "--modes", "prioritized,cyclic", "--d-est", "3", "--no-timings", "--report",
                     path("bench.tsv")}),
            kExitOk)
      << err_.str();
  EXPECT_NE(out_.str().find("wrote 12 rows"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("evals_ratio"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "bench.tsv"));
}

TEST_F(Cli, BenchRejectsMismatchedMultiplierLists) {
  EXPECT_EQ(run_cli({"bench", "--data", path("data.fvecs"), "--format", "fvecs", "--c0", "1,2", "--c1", "1,2,3",
                     "--report", path("b.tsv")}),
            kExitInvalidArguments);
}

TEST_F(Cli, ValidateProjectionProbability) {
  EXPECT_EQ(run_cli({"validate", "lemma1", "--d", "2", "--ratio", "0.5", "--M", "1", "--trials", "20000", "--seed",
                     "3"}),
            kExitOk);
  EXPECT_NE(out_.str().find("closed_form=0.333333"), std::string::npos) << out_.str();
  EXPECT_EQ(run_cli({"validate", "lemma1", "--d", "2", "--ratio", "1.5"}), kExitInvalidArguments);
}

TEST_F(Cli, Sparsity) {
  EXPECT_EQ(run_cli({"sparsity", "--data", path("data.fvecs"), "--format", "fvecs", "--tau", "5", "--samples", "20",
                     "--seed", "2"}),
            kExitOk);
  EXPECT_NE(out_.str().find("gamma="), std::string::npos);
  EXPECT_NE(out_.str().find("samples_used=20"), std::string::npos);
}

TEST_F(Cli, ArgumentErrorsExitWithTwo) {
  EXPECT_EQ(run_cli({}), kExitInvalidArguments);
  EXPECT_EQ(run_cli({"frobnicate"}), kExitInvalidArguments);
  EXPECT_EQ(run_cli({"build", "--data", path("data.fvecs")}), kExitInvalidArguments);
  EXPECT_EQ(run_cli({"build", "--data", path("data.fvecs"), "--format", "parquet", "--out", path("i.json")}),
            kExitInvalidArguments);
  EXPECT_EQ(run_cli({"build", "--data", path("data.fvecs"), "--format", "fvecs", "--m", "0", "--out",
                     path("i.json")}),
            kExitInvalidArguments);
}

TEST_F(Cli, DataErrorsExitWithThree) {
  EXPECT_EQ(run_cli({"build", "--data", path("missing.fvecs"), "--format", "fvecs", "--out", path("i.json")}),
            kExitDataError);
  {
    std::ofstream bad(dir_ / "bad.fvecs", std::ios::binary);
    bad.write("\x03\x00\x00\x00\x00", 5);
  }
  EXPECT_EQ(run_cli({"sparsity", "--data", path("bad.fvecs"), "--format", "fvecs"}), kExitDataError);
  EXPECT_NE(err_.str().find("byte offset"), std::string::npos) << err_.str();
  {
    std::ofstream(dir_ / "broken.json") << "not json";
  }
  EXPECT_EQ(run_cli({"query", "--index", path("broken.json"), "--queries", path("queries.txt"), "--k", "1", "--k0",
                     "1", "--k1", "5", "--report", path("r.tsv")}),
            kExitDataError);
}

TEST_F(Cli, HelpExitsCleanly) {
  EXPECT_EQ(run_cli({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("build"), std::string::npos);
}

}  // namespace
}  // namespace pdci::cli

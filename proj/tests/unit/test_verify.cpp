#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "twr/verify.hpp"

namespace twr {
namespace {

TEST(Verify, SuiteNamesAreUnique) {
  const auto names = verification_suites();
  EXPECT_EQ(names.size(), 12u);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
}

TEST(Verify, UnknownSuiteThrows) {
  EXPECT_THROW(run_suite("no_such_suite", VerifyConfig{}), std::invalid_argument);
}

TEST(Verify, AllSuitesPassInBothDimensions) {
  for (int dim : {3, 4}) {
    VerifyConfig cfg;
    cfg.seed = 11;
    cfg.cases = 300;
    cfg.dim = dim;
    for (const auto& r : run_verification(cfg)) {
      EXPECT_TRUE(r.passed) << r.name << " dim " << dim << ": " << r.first_failure;
      EXPECT_EQ(r.cases, cfg.cases);
      EXPECT_LE(r.max_error, r.tolerance);
      EXPECT_TRUE(r.first_failure.empty());
    }
  }
}

TEST(Verify, DeterministicForSeed) {
  VerifyConfig cfg;
  cfg.seed = 0xDEADBEEFCAFEull;
  cfg.cases = 100;
  const auto a = run_verification(cfg);
  const auto b = run_verification(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].max_error, b[i].max_error);
  }
  cfg.seed += 1;
  const auto c = run_verification(cfg);
  int differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) differing += a[i].max_error != c[i].max_error;
  EXPECT_GT(differing, 0);
}

TEST(Verify, SingleSuiteMatchesFullRun) {
  VerifyConfig cfg;
  cfg.seed = 5;
  cfg.cases = 50;
  const auto all = run_verification(cfg);
  for (const auto& r : all) EXPECT_EQ(run_suite(r.name, cfg).max_error, r.max_error) << r.name;
}

}  // namespace
}  // namespace twr

#include "lieortho/suites.hpp"

#include <gtest/gtest.h>

using namespace lieortho;

TEST(Suites, EverySuitePasses) {
  for (const auto &name : suite_names()) {
    const auto r = run_suite(name, 42, 10);
    EXPECT_TRUE(r.passed()) << name << ": " << r.witness.value_or("");
    EXPECT_GT(r.cases, 0u) << name;
  }
}

TEST(Suites, AllExpandsInOrderAndIsDeterministic) {
  const auto a = run_suites("all", 5, 3), b = run_suites("all", 5, 3);
  ASSERT_EQ(a.size(), suite_names().size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].name, suite_names()[k]);
    EXPECT_EQ(a[k].cases, b[k].cases);
  }
  EXPECT_THROW(run_suite("nope", 1, 1), std::invalid_argument);
}

TEST(Suites, InstancesCoverBothAlmostAbelianCases) {
  bool case1 = false, case2 = false;
  for (const Matrix &a : almost_abelian_instances()) {
    const std::size_t n = a.rows() + 1;
    const std::size_t m = normal_layout_center_dim(to_normal_layout(a).a);
    (m + 2 < n ? case1 : case2) = true;
  }
  EXPECT_TRUE(case1);
  EXPECT_TRUE(case2);
}

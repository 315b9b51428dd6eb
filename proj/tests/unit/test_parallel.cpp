#include <gtest/gtest.h>

#include <stdexcept>

#include "hecke/parallel.hpp"

using namespace hecke;

class ParallelTest : public ::testing::Test {
 protected:
  void SetUp() override { saved_ = thread_limit(); }
  void TearDown() override { set_thread_limit(saved_); }
  unsigned saved_ = 0;
};

TEST_F(ParallelTest, ResultsInIndexOrder) {
  for (unsigned threads : {1u, 2u, 5u}) {
    set_thread_limit(threads);
    auto out = parallel_map(100, [](std::size_t i) { return i * i; });
    ASSERT_EQ(out.size(), 100u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  }
}

TEST_F(ParallelTest, EmptyInput) {
  auto out = parallel_map(0, [](std::size_t i) { return i; });
  EXPECT_TRUE(out.empty());
}

TEST_F(ParallelTest, RethrowsWorkerException) {
  set_thread_limit(3);
  EXPECT_THROW(parallel_map(20,
                            [](std::size_t i) -> int {
                              if (i == 7) throw std::runtime_error("boom");
                              return 0;
                            }),
               std::runtime_error);
}

TEST_F(ParallelTest, LimitSetting) {
  set_thread_limit(3);
  EXPECT_EQ(thread_limit(), 3u);
  set_thread_limit(0);
  EXPECT_GE(thread_limit(), 1u);
}

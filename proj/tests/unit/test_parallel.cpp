#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "curvlab/parallel.hpp"

using namespace curvlab;

TEST(Parallel, VisitsEveryIndexOnce) {
  setenv("CURVLAB_THREADS", "4", 1);
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  unsetenv("CURVLAB_THREADS");
}

TEST(Parallel, RethrowsLowestFailingIndex) {
  setenv("CURVLAB_THREADS", "3", 1);
  try {
    parallel_for(100, [](std::size_t i) {
      if (i % 10 == 7) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
  unsetenv("CURVLAB_THREADS");
}

TEST(Parallel, WorkerCountFromEnvironment) {
  setenv("CURVLAB_THREADS", "5", 1);
  EXPECT_EQ(worker_count(), 5u);
  setenv("CURVLAB_THREADS", "junk", 1);
  EXPECT_GE(worker_count(), 1u);
  unsetenv("CURVLAB_THREADS");
}

#include "rdv/plan.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "test_support.h"

namespace rdv {
namespace {

TEST(Plan, WaitSkipsNonPositiveDurations) {
  Plan p;
  p.wait(0);
  p.wait(-3);
  EXPECT_TRUE(p.actions.empty());
  p.wait(4);
  ASSERT_EQ(p.actions.size(), 1u);
  EXPECT_EQ(std::get<Wait>(p.actions[0]).duration, 4);
}

TEST(Plan, WalkThereAndBack) {
  Graph g = testing::path3();
  WeightFn w({3, 5});
  Plan p;
  p.origin = 0;
  std::vector<EdgeIndex> path{0, 1};
  EXPECT_EQ(p.walk(g, 0, path), 2u);
  p.wait(2);
  EXPECT_EQ(p.walk_back(g, 2, path), 0u);
  EXPECT_EQ(p.final_node(g), 0u);
  EXPECT_EQ(p.duration(w), 3 + 5 + 2 + 5 + 3);
  ASSERT_EQ(p.actions.size(), 5u);
  EXPECT_EQ(std::get<Traverse>(p.actions[3]).edge, 1u);
  EXPECT_EQ(std::get<Traverse>(p.actions[3]).from, 2u);
}

TEST(Plan, FinalNodeRejectsDisconnectedSteps) {
  Graph g = testing::path3();
  Plan p;
  p.origin = 0;
  p.actions.push_back(Traverse{1, 1});
  EXPECT_THROW(p.final_node(g), std::logic_error);
}

TEST(Plan, EmptyPlanStaysAtOrigin) {
  Plan p;
  p.origin = 2;
  EXPECT_EQ(p.final_node(testing::path3()), 2u);
  EXPECT_EQ(p.duration(WeightFn({1, 1})), 0);
}

}  // namespace
}  // namespace rdv

// Copyright 2026 The Emboot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "emboot/pools.h"

#include <gtest/gtest.h>

#include "emboot/errors.h"

namespace emboot {
namespace {

Vocabulary Entities() {
  Vocabulary v;
  for (const char *s : {"Paris", "Rome", "IBM", "Sony", "Bob"}) v.Add(s);
  return v;
}

TEST(InitPoolsTest, KeepsCategoryAndSeedOrder) {
  const PoolState pools =
      InitPools({{"LOC", {"Rome", "Paris"}}, {"ORG", {"IBM"}}}, Entities());
  ASSERT_EQ(pools.num_categories(), 2u);
  EXPECT_EQ(pools.categories()[0], "LOC");
  ASSERT_EQ(pools.entities(0).size(), 2u);
  EXPECT_EQ(pools.entities(0)[0].id, 1);
  EXPECT_EQ(pools.entities(0)[0].epoch, 0);
  EXPECT_EQ(pools.EntityOwner(2), 1u);
  EXPECT_FALSE(pools.EntityOwner(4).has_value());
  EXPECT_EQ(pools.TotalEntities(), 3u);
  EXPECT_EQ(pools.CategoryIndex("ORG"), 1u);
  EXPECT_FALSE(pools.CategoryIndex("PER").has_value());
}

TEST(InitPoolsTest, Errors) {
  EXPECT_THROW(InitPools({}, Entities()), ConfigError);
  EXPECT_THROW(InitPools({{"LOC", {"Paris"}}, {"LOC", {"Rome"}}}, Entities()),
               ConfigError);
  EXPECT_THROW(InitPools({{"LOC", {"Paris"}}, {"ORG", {"Paris"}}}, Entities()),
               ConfigError);
  try {
    InitPools({{"LOC", {"Atlantis"}}}, Entities());
    FAIL();
  } catch (const ConfigError &e) {
    EXPECT_NE(std::string(e.what()).find("Atlantis"), std::string::npos);
  }
}

TEST(PoolStateTest, PoolsStayDisjoint) {
  PoolState pools({"A", "B"});
  pools.AddEntity(0, 3, 1, 0.9);
  pools.AddPattern(1, 3, 1, 2.0);
  EXPECT_THROW(pools.AddEntity(1, 3, 2), ConfigError);
  EXPECT_THROW(pools.AddPattern(0, 3, 2), ConfigError);
  EXPECT_EQ(pools.PatternOwner(3), 1u);
  const auto items = pools.Items(1);
  ASSERT_EQ(items.size(), 1u);
  EXPECT_EQ(items[0], Item::Pattern(3));
  PoolState copy = pools;
  EXPECT_TRUE(copy == pools);
  copy.AddEntity(1, 4, 2);
  EXPECT_FALSE(copy == pools);
}

}  // namespace
}  // namespace emboot

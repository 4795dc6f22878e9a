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

#include "emboot/word_vectors.h"

#include <sstream>

#include <gtest/gtest.h>

#include "emboot/errors.h"

namespace emboot {
namespace {

TEST(WordVectorsTest, LoadsAndAverages) {
  std::istringstream in("paris 1 0\nrome\t0 1\n\nberlin 1 1\n");
  const WordVectors v = WordVectors::Load(in);
  EXPECT_EQ(v.dim(), 2u);
  EXPECT_EQ(v.size(), 3u);
  ASSERT_TRUE(v.Find("rome").has_value());
  EXPECT_DOUBLE_EQ((*v.Find("rome"))[1], 1.0);
  size_t found = 0;
  const auto avg = v.Average({"paris", "rome", "oslo"}, &found);
  EXPECT_EQ(found, 2u);
  EXPECT_DOUBLE_EQ(avg[0], 0.5);
  EXPECT_DOUBLE_EQ(avg[1], 0.5);
  const auto none = v.Average({"oslo"}, &found);
  EXPECT_EQ(found, 0u);
  EXPECT_EQ(none, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(v.words(), (std::vector<std::string>{"paris", "rome", "berlin"}));
}

TEST(WordVectorsTest, RaggedRowNamesLine) {
  std::istringstream in("a 1 2\nb 1\n");
  try {
    WordVectors::Load(in);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream bad("a 1 x\n");
  EXPECT_THROW(WordVectors::Load(bad), ParseError);
}

TEST(SplitSurfaceTest, SplitsOnSpaces) {
  EXPECT_EQ(SplitSurface("New York City"),
            (std::vector<std::string>{"New", "York", "City"}));
  EXPECT_EQ(SplitSurface("Rome"), (std::vector<std::string>{"Rome"}));
}

}  // namespace
}  // namespace emboot

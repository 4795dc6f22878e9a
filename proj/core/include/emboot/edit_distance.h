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

#ifndef EMBOOT_EDIT_DISTANCE_H_
#define EMBOOT_EDIT_DISTANCE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace emboot {

// Decodes UTF-8 into code points. Invalid bytes map to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);

// Levenshtein distance with unit insert, delete and substitute costs.
size_t EditDistance(std::u32string_view a, std::u32string_view b);

// Same, over the code points of two UTF-8 strings.
size_t EditDistance(std::string_view a, std::string_view b);

// EditDistance divided by the longer length; 0 for two empty strings.
double NormalizedEditDistance(std::u32string_view a, std::u32string_view b);

}  // namespace emboot

#endif  // EMBOOT_EDIT_DISTANCE_H_

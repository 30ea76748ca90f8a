/*
 * Copyright 2026 The RITR Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "ritr/graph_io.hpp"

#include <cstdint>

namespace ritr {

// Planted-partition graph with bag-of-words attributes. Each class owns a
// block of "topic" words; a node draws most of its words from its class
// block and the rest uniformly, so attributes and structure agree.
struct SyntheticSpec {
  Index nodes = 300;
  Index features = 200;
  Index classes = 4;
  double p_in = 0.05;    // edge probability inside a class
  double p_out = 0.004;  // edge probability across classes
  Index words_per_node = 12;
  double topic_purity = 0.8;
  std::uint64_t seed = 1;
};

GraphDataset make_synthetic(const SyntheticSpec& spec);

}  // namespace ritr

// Copyright 2026 The ShaderFuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shaderfuzz/coverage.h"

namespace shaderfuzz {

uint8_t bucket_bit(uint8_t count) {
  if (count == 0) return 0;
  if (count == 1) return 1u << 0;
  if (count == 2) return 1u << 1;
  if (count == 3) return 1u << 2;
  if (count <= 7) return 1u << 3;
  if (count <= 15) return 1u << 4;
  if (count <= 31) return 1u << 5;
  if (count <= 127) return 1u << 6;
  return 1u << 7;
}

bool VirginMap::has_new_bits(const CoverageMap& run,
                             std::vector<uint16_t>* new_edges) const {
  bool any = false;
  for (size_t i = 0; i < kCoverageMapSize; ++i) {
    const uint8_t bit = bucket_bit(run.counters[i]);
    if (bit && (seen[i] & bit) == 0) {
      any = true;
      if (new_edges == nullptr) return true;
      new_edges->push_back(static_cast<uint16_t>(i));
    }
  }
  return any;
}

std::vector<uint16_t> VirginMap::merge(const CoverageMap& run) {
  std::vector<uint16_t> new_edges;
  for (size_t i = 0; i < kCoverageMapSize; ++i) {
    const uint8_t bit = bucket_bit(run.counters[i]);
    if (bit && (seen[i] & bit) == 0) {
      seen[i] |= bit;
      new_edges.push_back(static_cast<uint16_t>(i));
    }
  }
  return new_edges;
}

namespace cov {

ThreadState& thread_state() {
  thread_local ThreadState state;
  return state;
}

}  // namespace cov
}  // namespace shaderfuzz

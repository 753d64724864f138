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

#ifndef SHADERFUZZ_COVERAGE_H_
#define SHADERFUZZ_COVERAGE_H_

#include <array>
#include <cstdint>
#include <cstring>
#include <vector>

namespace shaderfuzz {

// Edge-counter map shared with the system under test. External targets mmap
// the identical layout: kCoverageMapSize raw byte counters, no header.
inline constexpr size_t kCoverageMapSize = 1u << 16;

struct CoverageMap {
  std::array<uint8_t, kCoverageMapSize> counters{};

  void clear() { counters.fill(0); }

  void hit(uint16_t index) {
    uint8_t& c = counters[index];
    if (c != 0xff) ++c;
  }

  std::vector<uint16_t> nonzero_edges() const {
    std::vector<uint16_t> out;
    for (size_t i = 0; i < kCoverageMapSize; ++i) {
      if (counters[i]) out.push_back(static_cast<uint16_t>(i));
    }
    return out;
  }
};

// AFL-style hit-count buckets: 1,2,3,4-7,8-15,16-31,32-127,128+.
// Novelty is judged on bucketed counts, one bit per bucket.
uint8_t bucket_bit(uint8_t count);

// The accumulated set of covered (edge, bucket) pairs for a whole campaign.
struct VirginMap {
  std::array<uint8_t, kCoverageMapSize> seen{};

  // True if `run` contains any (edge, bucket) not seen before. When
  // `new_edges` is non-null it receives the edges carrying new buckets.
  bool has_new_bits(const CoverageMap& run,
                    std::vector<uint16_t>* new_edges = nullptr) const;

  // Merges `run` into the virgin set, returning the edges that carried new
  // buckets. The covered set only ever grows.
  std::vector<uint16_t> merge(const CoverageMap& run);

  size_t covered_edge_count() const {
    size_t n = 0;
    for (uint8_t b : seen) n += b != 0;
    return n;
  }

  std::vector<uint16_t> covered_edges() const {
    std::vector<uint16_t> out;
    for (size_t i = 0; i < kCoverageMapSize; ++i) {
      if (seen[i]) out.push_back(static_cast<uint16_t>(i));
    }
    return out;
  }
};

namespace cov {

// Instrumentation regions of the bundled reference front-end. The region of
// an edge is recoverable from the top three bits of its map index, which the
// acceptance experiments use to attribute coverage to pipeline stages.
enum class Region : uint16_t {
  kLexer = 1,
  kParser = 2,
  kParserRecovery = 3,
  kResolver = 4,
  kTypeCheck = 5,
  kValidate = 6,
  kLimits = 7,
};

inline constexpr int kRegionShift = 13;

inline constexpr Region region_of_edge(uint16_t edge_index) {
  return static_cast<Region>(edge_index >> kRegionShift);
}

constexpr uint32_t fnv1a(const char* s) {
  uint32_t h = 2166136261u;
  while (*s) {
    h ^= static_cast<uint8_t>(*s++);
    h *= 16777619u;
  }
  return h;
}

// A site id packs the region into bits 13..15 and a fixed pseudorandom hash
// of the source location into bits 0..12.
constexpr uint16_t site_id(Region region, const char* file, int line) {
  uint32_t h = fnv1a(file) ^ (static_cast<uint32_t>(line) * 0x9e3779b9u);
  h ^= h >> 16;
  return static_cast<uint16_t>((static_cast<uint16_t>(region) << kRegionShift) |
                               (h & ((1u << kRegionShift) - 1)));
}

// Map attachment is thread local so independent campaign instances can run
// concurrently. Hooks are no-ops while no map is attached, which keeps the
// fuzzer's own parsing out of the feedback signal.
struct ThreadState {
  CoverageMap* map = nullptr;
  uint16_t prev = 0;
};
ThreadState& thread_state();

// Edge index: (previous site shifted) XOR current site, modulo the map size.
// The shift keeps the region bits of the current site intact in the index.
inline void hit_site(uint16_t site) {
  ThreadState& st = thread_state();
  if (st.map == nullptr) return;
  st.map->hit(static_cast<uint16_t>(site ^ (st.prev >> 3)));
  st.prev = site;
}

class ScopedMap {
 public:
  explicit ScopedMap(CoverageMap& map) {
    ThreadState& st = thread_state();
    saved_ = st;
    st.map = &map;
    st.prev = 0;
  }
  ~ScopedMap() { thread_state() = saved_; }
  ScopedMap(const ScopedMap&) = delete;
  ScopedMap& operator=(const ScopedMap&) = delete;

 private:
  ThreadState saved_;
};

}  // namespace cov
}  // namespace shaderfuzz

// Marks one branch site of the reference front-end.
#define SF_COV(region)                                                     \
  do {                                                                     \
    constexpr uint16_t sf_cov_site = ::shaderfuzz::cov::site_id(           \
        ::shaderfuzz::cov::Region::region, __FILE__, __LINE__);            \
    ::shaderfuzz::cov::hit_site(sf_cov_site);                              \
  } while (0)

#endif  // SHADERFUZZ_COVERAGE_H_

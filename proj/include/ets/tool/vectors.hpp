// Copyright 2026 The ets Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic test-vector files.
//
// One record per line, space-separated name=hex fields:
//   profile=<name> key=<hex> ad=<hex> m=<hex> bt=<hex> ct=<hex> stream=<hex>
// where stream is serialize_stream(encode(ad, m)). Lines starting with '#'
// are comments. Contents are drawn from raw mt19937_64 output so files are
// identical across platforms for the same seed.

#ifndef ETS_TOOL_VECTORS_HPP_
#define ETS_TOOL_VECTORS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ets/backend.hpp"
#include "ets/bytes.hpp"

namespace ets::tool {

struct VectorCase {
  std::string label;
  std::size_t ad_len;
  std::size_t m_len;
  std::size_t key_len;
};

// The branch-covering grid for one profile: empty ad, empty m, r = 0,
// r a multiple of mav below c, j < n, j = n, ad ending mid-region, ad ending
// on a region boundary, and a long input.
std::vector<VectorCase> vector_grid(const BackendProfile& profile);

inline constexpr std::size_t kGridSize = 14;
inline constexpr std::uint64_t kDefaultVectorSeed = 0x455453;

struct VectorRecord {
  std::string profile;
  Bytes key, ad, m, bt, ct, stream;
};

std::vector<VectorRecord> generate_vectors(
    const std::vector<BackendProfile>& profiles, std::uint64_t seed);

std::string format_vectors(const std::vector<VectorRecord>& records,
                           std::uint64_t seed);

// Throws ParameterError on malformed lines.
std::vector<VectorRecord> parse_vectors(const std::string& text);

// Re-derives every record through enc, dec and encode. Returns the number of
// records checked; throws std::runtime_error naming the first mismatch.
std::size_t verify_vectors(const std::vector<VectorRecord>& records);

}  // namespace ets::tool

#endif  // ETS_TOOL_VECTORS_HPP_

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

// On-disk container: "ETS1" | backend id | tag length | 0x0000 | tag | ct.

#ifndef ETS_TOOL_CONTAINER_HPP_
#define ETS_TOOL_CONTAINER_HPP_

#include <cstddef>

#include "ets/backend.hpp"
#include "ets/bytes.hpp"

namespace ets::tool {

inline constexpr std::size_t kContainerHeaderSize = 8;

struct Container {
  BackendId backend = BackendId::kSha256;
  Bytes tag;
  Bytes ciphertext;
  bool operator==(const Container&) const = default;
};

Bytes serialize_container(const Container& container);

// Throws ParameterError on bad magic, unknown backend, tag length outside
// [1, c], nonzero reserved bytes or truncated input.
Container parse_container(ByteView bytes);

// Backends a container may name: SHA-256, SHA-512 and BLAKE2b.
const BackendProfile& container_profile(BackendId id);

}  // namespace ets::tool

#endif  // ETS_TOOL_CONTAINER_HPP_

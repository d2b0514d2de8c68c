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

#include "ets/tool/container.hpp"

#include <cstring>
#include <string>

namespace ets::tool {
namespace {

constexpr std::uint8_t kMagic[4] = {'E', 'T', 'S', '1'};

}  // namespace

const BackendProfile& container_profile(BackendId id) {
  switch (id) {
    case BackendId::kSha256: return BackendProfile::sha256();
    case BackendId::kSha512: return BackendProfile::sha512();
    case BackendId::kBlake2b: return BackendProfile::blake2b();
    default: break;
  }
  throw ParameterError("unknown backend id " +
                       std::to_string(static_cast<unsigned>(id)));
}

Bytes serialize_container(const Container& container) {
  const BackendProfile& profile = container_profile(container.backend);
  if (container.tag.empty() || container.tag.size() > profile.chain_size()) {
    throw ParameterError("tag length out of range for backend");
  }
  Bytes out(kMagic, kMagic + 4);
  out.push_back(static_cast<std::uint8_t>(container.backend));
  out.push_back(static_cast<std::uint8_t>(container.tag.size()));
  out.push_back(0);
  out.push_back(0);
  out.insert(out.end(), container.tag.begin(), container.tag.end());
  out.insert(out.end(), container.ciphertext.begin(), container.ciphertext.end());
  return out;
}

Container parse_container(ByteView bytes) {
  if (bytes.size() < kContainerHeaderSize ||
      std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw ParameterError("not an ETS1 container");
  }
  Container c;
  c.backend = static_cast<BackendId>(bytes[4]);
  const BackendProfile& profile = container_profile(c.backend);
  const std::size_t taglen = bytes[5];
  if (taglen < 1 || taglen > profile.chain_size()) {
    throw ParameterError("container tag length out of range");
  }
  if (bytes[6] != 0 || bytes[7] != 0) {
    throw ParameterError("container reserved bytes are nonzero");
  }
  if (bytes.size() < kContainerHeaderSize + taglen) {
    throw ParameterError("container truncated");
  }
  const auto tag_begin = bytes.begin() + kContainerHeaderSize;
  c.tag.assign(tag_begin, tag_begin + taglen);
  c.ciphertext.assign(tag_begin + taglen, bytes.end());
  return c;
}

}  // namespace ets::tool

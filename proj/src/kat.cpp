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

#include "ets/kat.hpp"

#include <algorithm>
#include <cstring>

namespace ets::kat {
namespace {

template <typename Compress>
Bytes md_hash(ByteView message, std::size_t block, std::size_t length_field,
              ByteView iv, Compress compress) {
  Bytes padded(message.begin(), message.end());
  padded.push_back(0x80);
  while (padded.size() % block != block - length_field) padded.push_back(0);
  const std::uint64_t bits = static_cast<std::uint64_t>(message.size()) * 8;
  for (std::size_t i = 0; i < length_field; ++i) {
    const std::size_t shift = 8 * (length_field - 1 - i);
    padded.push_back(shift < 64 ? static_cast<std::uint8_t>(bits >> shift) : 0);
  }
  Bytes chain(iv.begin(), iv.end());
  for (std::size_t pos = 0; pos < padded.size(); pos += block) {
    compress(padded.data() + pos, chain.data());
  }
  return chain;
}

}  // namespace

Bytes sha256(ByteView message) {
  return md_hash(message, 64, 8, BackendProfile::sha256().iv(),
                 detail::sha256_compress_inplace);
}

Bytes sha512(ByteView message) {
  return md_hash(message, 128, 16, BackendProfile::sha512().iv(),
                 detail::sha512_compress_inplace);
}

Bytes blake2b512(ByteView message) {
  const ByteView iv = BackendProfile::blake2b().iv();
  Bytes chain(iv.begin(), iv.end());
  std::uint8_t block[128];
  std::size_t pos = 0;
  // All but the last (possibly partial, possibly empty) block.
  while (message.size() - pos > 128) {
    std::memcpy(block, message.data() + pos, 128);
    pos += 128;
    detail::blake2b_compress_inplace(block, chain.data(), pos, 0, false, false);
  }
  const std::size_t rest = message.size() - pos;
  std::memset(block, 0, sizeof block);
  if (rest > 0) std::memcpy(block, message.data() + pos, rest);
  detail::blake2b_compress_inplace(block, chain.data(), message.size(), 0, true, false);
  return chain;
}

}  // namespace ets::kat

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

#include <cstdint>
#include <string>

#include "ets/backend.hpp"

namespace ets {
namespace {

constexpr std::uint8_t kOmega1Byte = 0xa5;
constexpr std::uint8_t kTauByte = 0x5a;

Bytes be_words32(std::initializer_list<std::uint32_t> words) {
  Bytes out;
  for (std::uint32_t w : words) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(w >> s));
  }
  return out;
}

Bytes be_words64(std::initializer_list<std::uint64_t> words) {
  Bytes out;
  for (std::uint64_t w : words) {
    for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(w >> s));
  }
  return out;
}

Bytes le_words64(std::initializer_list<std::uint64_t> words) {
  Bytes out;
  for (std::uint64_t w : words) {
    for (int s = 0; s < 64; s += 8) out.push_back(static_cast<std::uint8_t>(w >> s));
  }
  return out;
}

void require_size(ByteView v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw ParameterError(std::string(what) + " must be " + std::to_string(n) +
                         " bytes, got " + std::to_string(v.size()));
  }
}

}  // namespace

BackendProfile::BackendProfile(BackendId id, std::string_view name,
                               std::size_t c, std::size_t d, std::size_t mav,
                               Bytes iv, std::size_t taglen_default)
    : id_(id),
      name_(name),
      c_(c),
      d_(d),
      mav_(mav),
      iv_(std::move(iv)),
      tau_(c, kTauByte),
      omega0_(c, 0x00),
      omega1_(c, kOmega1Byte),
      taglen_default_(taglen_default) {
  if (c_ == 0 || mav_ == 0 || c_ >= d_) {
    throw ParameterError("profile requires 0 < c < d and mav > 0");
  }
  if (c_ % mav_ != 0 || d_ % mav_ != 0) {
    throw ParameterError("mav must divide both c and d");
  }
  if (c_ > 256 || 256 % c_ != 0) throw ParameterError("c must divide 256");
  if (taglen_default_ < 1 || taglen_default_ > c_) {
    throw ParameterError("default tag length out of range");
  }
  if (iv_.size() != c_) throw ParameterError("IV length must equal c");
}

const BackendProfile& BackendProfile::sha256() {
  static const BackendProfile p(
      BackendId::kSha256, "sha256", 32, 64, 8,
      be_words32({0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a, 0x510e527f,
                  0x9b05688c, 0x1f83d9ab, 0x5be0cd19}),
      32);
  return p;
}

const BackendProfile& BackendProfile::sha512() {
  static const BackendProfile p(
      BackendId::kSha512, "sha512", 64, 128, 8,
      be_words64({0x6a09e667f3bcc908, 0xbb67ae8584caa73b, 0x3c6ef372fe94f82b,
                  0xa54ff53a5f1d36f1, 0x510e527fade682d1, 0x9b05688c2b3e6c1f,
                  0x1f83d9abfb41bd6b, 0x5be0cd19137e2179}),
      32);
  return p;
}

const BackendProfile& BackendProfile::blake2b() {
  // BLAKE2b-512 unkeyed parameter block folded into IV[0].
  static const BackendProfile p(
      BackendId::kBlake2b, "blake2b", 64, 128, 8,
      le_words64({0x6a09e667f3bcc908 ^ 0x01010040, 0xbb67ae8584caa73b,
                  0x3c6ef372fe94f82b, 0xa54ff53a5f1d36f1, 0x510e527fade682d1,
                  0x9b05688c2b3e6c1f, 0x1f83d9abfb41bd6b, 0x5be0cd19137e2179}),
      32);
  return p;
}

const BackendProfile& BackendProfile::toy() {
  static const BackendProfile p(BackendId::kToy, "toy", 4, 8, 2, Bytes(4, 0), 4);
  return p;
}

BackendProfile BackendProfile::geometry(std::size_t chain_size,
                                        std::size_t block_size,
                                        std::size_t mav) {
  return BackendProfile(BackendId::kGeometry, "geometry", chain_size,
                        block_size, mav, Bytes(chain_size, 0),
                        chain_size < 32 ? chain_size : 32);
}

const BackendProfile& BackendProfile::from_id(std::uint8_t id) {
  switch (static_cast<BackendId>(id)) {
    case BackendId::kSha256: return sha256();
    case BackendId::kSha512: return sha512();
    case BackendId::kBlake2b: return blake2b();
    case BackendId::kToy: return toy();
    default: break;
  }
  throw ParameterError("unknown backend id " + std::to_string(id));
}

std::optional<BackendProfile> BackendProfile::from_name(std::string_view name) {
  if (name == "sha256") return sha256();
  if (name == "sha512") return sha512();
  if (name == "blake2b") return blake2b();
  if (name == "toy") return toy();
  return std::nullopt;
}

namespace detail {

void toy_compress_inplace(const std::uint8_t* block, Tweak tweak,
                          std::uint8_t* chain) {
  const unsigned t = tweak == Tweak::kOne ? 0xa5u : 0u;
  for (unsigned i = 0; i < 4; ++i) {
    chain[i] = static_cast<std::uint8_t>(chain[i] + block[i] + block[i + 4] + t + i);
  }
}

}  // namespace detail

Bytes sha256_compress(ByteView block, ByteView chain) {
  require_size(block, 64, "SHA-256 block");
  require_size(chain, 32, "SHA-256 chain value");
  Bytes out(chain.begin(), chain.end());
  detail::sha256_compress_inplace(block.data(), out.data());
  return out;
}

Bytes sha512_compress(ByteView block, ByteView chain) {
  require_size(block, 128, "SHA-512 block");
  require_size(chain, 64, "SHA-512 chain value");
  Bytes out(chain.begin(), chain.end());
  detail::sha512_compress_inplace(block.data(), out.data());
  return out;
}

Bytes blake2b_compress(ByteView block, Tweak tweak, ByteView chain) {
  require_size(block, 128, "BLAKE2b block");
  require_size(chain, 64, "BLAKE2b chain value");
  Bytes out(chain.begin(), chain.end());
  detail::blake2b_compress_inplace(block.data(), out.data(), 0, 0, false,
                                   tweak == Tweak::kOne);
  return out;
}

Bytes toy_compress(ByteView block, Tweak tweak, ByteView chain) {
  require_size(block, 8, "toy block");
  require_size(chain, 4, "toy chain value");
  Bytes out(chain.begin(), chain.end());
  detail::toy_compress_inplace(block.data(), tweak, out.data());
  return out;
}

void tweaked_update(const BackendProfile& profile, ByteView block, Tweak tweak,
                    MutableByteView chain) {
  require_size(block, profile.block_size(), "block");
  if (chain.size() != profile.chain_size()) {
    throw ParameterError("chain value length does not match profile");
  }
  switch (profile.id()) {
    case BackendId::kSha256:
      if (tweak == Tweak::kOne) xor_into(chain, profile.tweak_constant());
      detail::sha256_compress_inplace(block.data(), chain.data());
      return;
    case BackendId::kSha512:
      if (tweak == Tweak::kOne) xor_into(chain, profile.tweak_constant());
      detail::sha512_compress_inplace(block.data(), chain.data());
      return;
    case BackendId::kBlake2b:
      detail::blake2b_compress_inplace(block.data(), chain.data(), 0, 0, false,
                                       tweak == Tweak::kOne);
      return;
    case BackendId::kToy:
      detail::toy_compress_inplace(block.data(), tweak, chain.data());
      return;
    case BackendId::kGeometry:
      break;
  }
  throw ParameterError("profile has no compression function");
}

Bytes tweaked_call(const BackendProfile& profile, ByteView block, Tweak tweak,
                   ByteView chain) {
  Bytes out(chain.begin(), chain.end());
  tweaked_update(profile, block, tweak, out);
  return out;
}

}  // namespace ets

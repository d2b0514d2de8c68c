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

// Compression functions and the parameter profiles that bind them to the
// encrypt-to-self mode.

#ifndef ETS_BACKEND_HPP_
#define ETS_BACKEND_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ets/bytes.hpp"

namespace ets {

enum class BackendId : std::uint8_t {
  kGeometry = 0,  // layout-only profile, has no compression function
  kSha256 = 1,
  kSha512 = 2,
  kBlake2b = 3,
  kToy = 255,
};

enum class Tweak : std::uint8_t { kZero = 0, kOne = 1 };

inline Tweak flip(Tweak t) { return t == Tweak::kZero ? Tweak::kOne : Tweak::kZero; }

// Selects omega0 or omega1.
enum class OffsetSelector : std::uint8_t { kOmega0 = 0, kOmega1 = 1 };

// Immutable parameter bundle of one compression backend.
//
// Invariants (checked on construction): c < d, mav | c, mav | d, c | 256,
// 1 <= default tag length <= c, and all constants have length c.
class BackendProfile {
 public:
  static const BackendProfile& sha256();
  static const BackendProfile& sha512();
  static const BackendProfile& blake2b();
  static const BackendProfile& toy();

  // A profile with arbitrary geometry and no compression function. Useful for
  // exercising the encoder at sizes no real backend has (e.g. c=1, d=2).
  static BackendProfile geometry(std::size_t chain_size, std::size_t block_size,
                                 std::size_t mav);

  // Throws ParameterError for ids without a built-in profile.
  static const BackendProfile& from_id(std::uint8_t id);
  // "sha256", "sha512", "blake2b" or "toy".
  static std::optional<BackendProfile> from_name(std::string_view name);

  BackendId id() const { return id_; }
  std::string_view name() const { return name_; }
  std::size_t chain_size() const { return c_; }
  std::size_t block_size() const { return d_; }
  std::size_t mav() const { return mav_; }
  std::size_t default_tag_length() const { return taglen_default_; }
  // Largest supported key: the key mask stays inside the ad part of every
  // payload-carrying block.
  std::size_t max_key_length() const { return d_ - c_; }

  ByteView iv() const { return iv_; }
  ByteView tweak_constant() const { return tau_; }
  ByteView offset(OffsetSelector s) const {
    return s == OffsetSelector::kOmega0 ? ByteView(omega0_) : ByteView(omega1_);
  }

  bool has_compression() const { return id_ != BackendId::kGeometry; }
  // SHA-2 backends are tweaked through the chain value; BLAKE2b and the toy
  // function take the tweak bit natively.
  bool natively_tweakable() const {
    return id_ == BackendId::kBlake2b || id_ == BackendId::kToy;
  }

 private:
  BackendProfile(BackendId id, std::string_view name, std::size_t c,
                 std::size_t d, std::size_t mav, Bytes iv,
                 std::size_t taglen_default);

  BackendId id_;
  std::string_view name_;
  std::size_t c_;
  std::size_t d_;
  std::size_t mav_;
  Bytes iv_;
  Bytes tau_;
  Bytes omega0_;
  Bytes omega1_;
  std::size_t taglen_default_;
};

// FIPS 180-4 SHA-256 compression of one 64-byte block into a 32-byte
// big-endian chain value.
Bytes sha256_compress(ByteView block, ByteView chain);
// FIPS 180-4 SHA-512 compression, 128-byte block, 64-byte chain.
Bytes sha512_compress(ByteView block, ByteView chain);
// RFC 7693 F with the byte counter fixed to 0, f0 = 0 and the tweak carried in
// the last-node flag f1.
Bytes blake2b_compress(ByteView block, Tweak tweak, ByteView chain);
// out[i] = chain[i] + block[i] + block[i+4] + tweak*0xa5 + i (mod 256).
Bytes toy_compress(ByteView block, Tweak tweak, ByteView chain);

// F_t(B, C) for the given profile.
Bytes tweaked_call(const BackendProfile& profile, ByteView block, Tweak tweak,
                   ByteView chain);

// In-place form of tweaked_call: chain <- F_t(block, chain).
void tweaked_update(const BackendProfile& profile, ByteView block, Tweak tweak,
                    MutableByteView chain);

namespace detail {

// Unchecked in-place kernels; sizes are the caller's responsibility.
void sha256_compress_inplace(const std::uint8_t* block, std::uint8_t* chain);
void sha512_compress_inplace(const std::uint8_t* block, std::uint8_t* chain);
void toy_compress_inplace(const std::uint8_t* block, Tweak tweak,
                          std::uint8_t* chain);

// Full RFC 7693 F, exposed for hash framing in tests.
void blake2b_compress_inplace(const std::uint8_t* block, std::uint8_t* chain,
                              std::uint64_t counter_lo, std::uint64_t counter_hi,
                              bool last_block, bool last_node);

}  // namespace detail

}  // namespace ets

#endif  // ETS_BACKEND_HPP_

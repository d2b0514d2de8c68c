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

// Encryption engine: enc/dec over the block producer.

#ifndef ETS_ENGINE_HPP_
#define ETS_ENGINE_HPP_

#include <cstddef>
#include <optional>

#include "ets/backend.hpp"
#include "ets/bytes.hpp"
#include "ets/encoding.hpp"

namespace ets {

// Profile, key and tag length for one encryptor. Immutable; the key is wiped
// on destruction.
class EtsContext {
 public:
  // Requires 1 <= |key| <= d - c and 1 <= tag_length <= c. The tag length
  // defaults to the profile's default.
  EtsContext(BackendProfile profile, ByteView key,
             std::optional<std::size_t> tag_length = std::nullopt);
  ~EtsContext();

  EtsContext(const EtsContext& other);
  EtsContext& operator=(const EtsContext&) = delete;

  const BackendProfile& profile() const { return profile_; }
  ByteView key() const { return key_; }
  std::size_t tag_length() const { return tag_length_; }

 private:
  BackendProfile profile_;
  Bytes key_;
  std::size_t tag_length_;
};

struct EncryptionResult {
  Bytes tag;         // binding tag, tag_length() bytes
  Bytes ciphertext;  // same length as the message
};

EncryptionResult enc(const EtsContext& ctx, ByteView ad, ByteView message,
                     CopyObserver observer = {});

// Returns the message, or throws AuthenticationError if the recomputed tag
// differs. Throws ParameterError if |tag| != ctx.tag_length().
Bytes dec(const EtsContext& ctx, ByteView tag, ByteView ad, ByteView ciphertext);

// Decrypts and returns the recomputed tag without comparing it. dec() is
// recover() plus a constant-time comparison.
EncryptionResult recover(const EtsContext& ctx, ByteView ad, ByteView ciphertext);

// Runs the chain over an explicit stream, XORing the key into blocks
// 1..max(1, masked_blocks). For encode(ad, m) with masked_blocks = j this
// reproduces enc()'s tag.
Bytes tag_for_stream(const EtsContext& ctx, const EncodedStream& stream,
                     std::size_t masked_blocks);

}  // namespace ets

#endif  // ETS_ENGINE_HPP_

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

#include "ets/engine.hpp"

#include <algorithm>
#include <string>

namespace ets {
namespace {

void mask_key(MutableByteView block, ByteView key) { xor_into(block, key); }

Bytes finish_tag(const EtsContext& ctx, Bytes& chain, OffsetSelector offset) {
  xor_into(chain, ctx.profile().offset(offset));
  Bytes tag(chain.begin(), chain.begin() + ctx.tag_length());
  secure_wipe(chain);
  return tag;
}

}  // namespace

EtsContext::EtsContext(BackendProfile profile, ByteView key,
                       std::optional<std::size_t> tag_length)
    : profile_(std::move(profile)),
      key_(key.begin(), key.end()),
      tag_length_(tag_length.value_or(profile_.default_tag_length())) {
  if (!profile_.has_compression()) {
    throw ParameterError("profile has no compression function");
  }
  if (key_.empty() || key_.size() > profile_.max_key_length()) {
    throw ParameterError("key length must be in [1, " +
                         std::to_string(profile_.max_key_length()) + "]");
  }
  if (tag_length_ < 1 || tag_length_ > profile_.chain_size()) {
    throw ParameterError("tag length must be in [1, " +
                         std::to_string(profile_.chain_size()) + "]");
  }
}

EtsContext::EtsContext(const EtsContext& other) = default;

EtsContext::~EtsContext() { secure_wipe(key_); }

EncryptionResult enc(const EtsContext& ctx, ByteView ad, ByteView message,
                     CopyObserver observer) {
  const BackendProfile& profile = ctx.profile();
  BlockProducer producer(profile, ad, message, std::move(observer));
  const std::size_t j = producer.plan().j;

  Bytes chain(profile.iv().begin(), profile.iv().end());
  Bytes block(profile.block_size());
  EncryptionResult out;
  out.ciphertext.resize(message.size());
  std::size_t ct_pos = 0;

  while (auto info = producer.next(block)) {
    if (info->index == 1 || info->index <= j) mask_key(block, ctx.key());
    // The first chain value is public, so keystream starts at block 2.
    const std::uint8_t* fragment = block.data() + info->payload_offset;
    for (std::size_t t = 0; t < info->payload_length; ++t) {
      out.ciphertext[ct_pos + t] = fragment[t] ^ chain[t];
    }
    ct_pos += info->payload_length;
    tweaked_update(profile, block, info->tweak, chain);
  }
  secure_wipe(block);
  out.tag = finish_tag(ctx, chain, producer.final_offset());
  return out;
}

EncryptionResult recover(const EtsContext& ctx, ByteView ad,
                         ByteView ciphertext) {
  const BackendProfile& profile = ctx.profile();
  BlockProducer producer(profile, ad, ciphertext);
  const std::size_t j = producer.plan().j;

  Bytes chain(profile.iv().begin(), profile.iv().end());
  Bytes block(profile.block_size());
  EncryptionResult out;
  out.ciphertext.resize(ciphertext.size());  // holds the plaintext
  std::size_t pos = 0;

  while (auto info = producer.next(block)) {
    if (info->index == 1 || info->index <= j) mask_key(block, ctx.key());
    // Only the ciphertext bytes are unmasked; padding and the length byte are
    // already in plaintext form.
    std::uint8_t* fragment = block.data() + info->payload_offset;
    for (std::size_t t = 0; t < info->payload_length; ++t) {
      fragment[t] ^= chain[t];
      out.ciphertext[pos + t] = fragment[t];
    }
    pos += info->payload_length;
    tweaked_update(profile, block, info->tweak, chain);
  }
  secure_wipe(block);
  out.tag = finish_tag(ctx, chain, producer.final_offset());
  return out;
}

Bytes dec(const EtsContext& ctx, ByteView tag, ByteView ad,
          ByteView ciphertext) {
  if (tag.size() != ctx.tag_length()) {
    throw ParameterError("binding tag must be " +
                         std::to_string(ctx.tag_length()) + " bytes");
  }
  EncryptionResult r = recover(ctx, ad, ciphertext);
  if (!constant_time_equal(r.tag, tag)) {
    secure_wipe(r.ciphertext);
    throw AuthenticationError();
  }
  return std::move(r.ciphertext);
}

Bytes tag_for_stream(const EtsContext& ctx, const EncodedStream& stream,
                     std::size_t masked_blocks) {
  const BackendProfile& profile = ctx.profile();
  const std::size_t masked = std::max<std::size_t>(1, masked_blocks);
  Bytes chain(profile.iv().begin(), profile.iv().end());
  Bytes block;
  for (std::size_t i = 0; i < stream.blocks.size(); ++i) {
    block = stream.blocks[i].block;
    if (i < masked) mask_key(block, ctx.key());
    tweaked_update(profile, block, stream.blocks[i].tweak, chain);
  }
  secure_wipe(block);
  return finish_tag(ctx, chain, stream.offset);
}

}  // namespace ets

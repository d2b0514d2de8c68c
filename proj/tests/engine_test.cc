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

#include <gtest/gtest.h>

#include <random>
#include <string_view>
#include <vector>

namespace ets {
namespace {

Bytes str(std::string_view s) { return Bytes(s.begin(), s.end()); }

Bytes seq(std::uint8_t first, std::size_t n) {
  Bytes out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(first + i);
  return out;
}

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

const std::vector<const BackendProfile*>& real_profiles() {
  static const std::vector<const BackendProfile*> all = {
      &BackendProfile::sha256(), &BackendProfile::sha512(), &BackendProfile::blake2b()};
  return all;
}

// Straight-line toy engine built from the reference encoder; shares no code
// with the streaming path beyond the layout arithmetic.
EncryptionResult toy_oracle(ByteView key, ByteView ad, ByteView m) {
  const BackendProfile& toy = BackendProfile::toy();
  const EncodedStream s = encode_reference(toy, ad, m);
  const LayoutPlan plan = plan_layout(toy, ad.size(), m.size());
  std::uint8_t chain[4] = {0, 0, 0, 0};
  EncryptionResult out;
  std::size_t pos = 0;
  for (std::size_t i = 1; i <= s.blocks.size(); ++i) {
    Bytes block = s.blocks[i - 1].block;
    if (i == 1 || i <= plan.j) {
      for (std::size_t k = 0; k < key.size(); ++k) block[k] ^= key[k];
    }
    if (i >= 2 && i <= plan.j) {
      const std::size_t region = plan.payload_region(i, 4);
      const std::size_t len = (i == plan.j && plan.msg_padded) ? plan.r : 4;
      for (std::size_t t = 0; t < len; ++t) {
        out.ciphertext.push_back(block[8 - region + t] ^ chain[t]);
      }
      pos += len;
    }
    const unsigned t = s.blocks[i - 1].tweak == Tweak::kOne ? 1 : 0;
    for (unsigned k = 0; k < 4; ++k) {
      chain[k] = static_cast<std::uint8_t>(chain[k] + block[k] + block[k + 4] + t * 0xa5 + k);
    }
  }
  const std::uint8_t w = s.offset == OffsetSelector::kOmega1 ? 0xa5 : 0x00;
  for (unsigned k = 0; k < 4; ++k) out.tag.push_back(chain[k] ^ w);
  EXPECT_EQ(pos, m.size());
  return out;
}

TEST(EngineGoldenTest, ToySingleByteMessage) {
  const EtsContext ctx(BackendProfile::toy(), from_hex("11223344"));
  const EncryptionResult r = enc(ctx, {}, from_hex("41"));
  EXPECT_EQ(to_hex(r.tag), "e24ef591");
  EXPECT_EQ(to_hex(r.ciphertext), "d0");
}

TEST(EngineGoldenTest, ToyMultiBlock) {
  const EtsContext ctx(BackendProfile::toy(), from_hex("11223344"));
  const EncryptionResult r = enc(ctx, seq(0xa0, 10), seq(0xb0, 5));
  EXPECT_EQ(to_hex(r.tag), "d18b8bd9");
  EXPECT_EQ(to_hex(r.ciphertext), "e5988b220a");
}

TEST(EngineGoldenTest, ToyEmptyInputs) {
  const EtsContext ctx(BackendProfile::toy(), from_hex("01"));
  const EncryptionResult r = enc(ctx, {}, {});
  EXPECT_EQ(to_hex(r.tag), "8303020d");
  EXPECT_TRUE(r.ciphertext.empty());
}

TEST(EngineOracleTest, ToyMatchesStraightLineOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 5000; ++i) {
    const Bytes key = random_bytes(rng, 1 + rng() % 4);
    const Bytes ad = random_bytes(rng, rng() % 30);
    const Bytes m = random_bytes(rng, rng() % 25);
    const EtsContext ctx(BackendProfile::toy(), key);
    const EncryptionResult got = enc(ctx, ad, m);
    const EncryptionResult want = toy_oracle(key, ad, m);
    ASSERT_EQ(got.tag, want.tag) << to_hex(key) << " " << to_hex(ad) << " " << to_hex(m);
    ASSERT_EQ(got.ciphertext, want.ciphertext);
  }
}

TEST(EngineTest, RoundTripAllProfiles) {
  std::mt19937_64 rng(32);
  for (const BackendProfile* prof : real_profiles()) {
    for (int i = 0; i < 300; ++i) {
      const Bytes key = random_bytes(rng, 1 + rng() % prof->max_key_length());
      const Bytes ad = random_bytes(rng, rng() % 500);
      const Bytes m = random_bytes(rng, rng() % 500);
      const EtsContext ctx(*prof, key);
      const EncryptionResult r = enc(ctx, ad, m);
      ASSERT_EQ(r.tag.size(), 32u);
      ASSERT_EQ(r.ciphertext.size(), m.size());
      ASSERT_EQ(dec(ctx, r.tag, ad, r.ciphertext), m);
    }
  }
}

TEST(EngineTest, EmptyMessageStillBindsAd) {
  const EtsContext ctx(BackendProfile::sha256(), seq(1, 16));
  const EncryptionResult a = enc(ctx, as_bytes("header"), {});
  const EncryptionResult b = enc(ctx, as_bytes("headex"), {});
  EXPECT_TRUE(a.ciphertext.empty());
  EXPECT_NE(a.tag, b.tag);
  EXPECT_TRUE(dec(ctx, a.tag, as_bytes("header"), {}).empty());
  EXPECT_THROW(dec(ctx, a.tag, as_bytes("headex"), {}), AuthenticationError);
}

TEST(EngineTest, TagMatchesExplicitStream) {
  std::mt19937_64 rng(33);
  for (const BackendProfile* prof : real_profiles()) {
    for (int i = 0; i < 100; ++i) {
      const Bytes key = random_bytes(rng, 1 + rng() % prof->max_key_length());
      const Bytes ad = random_bytes(rng, rng() % 400);
      const Bytes m = random_bytes(rng, rng() % 400);
      const EtsContext ctx(*prof, key);
      const LayoutPlan plan = plan_layout(*prof, ad.size(), m.size());
      ASSERT_EQ(tag_for_stream(ctx, encode(*prof, ad, m), plan.j), enc(ctx, ad, m).tag);
    }
  }
}

TEST(EngineTest, OffsetAndTweakFlipsChangeTag) {
  std::mt19937_64 rng(34);
  for (const BackendProfile* prof : real_profiles()) {
    const EtsContext ctx(*prof, seq(7, 24));
    for (int i = 0; i < 50; ++i) {
      const Bytes ad = random_bytes(rng, rng() % 300);
      const Bytes m = random_bytes(rng, rng() % 300);
      const EncodedStream s = encode(*prof, ad, m);
      const std::size_t j = plan_layout(*prof, ad.size(), m.size()).j;
      const Bytes base = tag_for_stream(ctx, s, j);
      EncodedStream flipped = s;
      flipped.offset = flipped.offset == OffsetSelector::kOmega0 ? OffsetSelector::kOmega1
                                                                  : OffsetSelector::kOmega0;
      ASSERT_NE(tag_for_stream(ctx, flipped, j), base);
      for (std::size_t k = 0; k < s.blocks.size(); ++k) {
        EncodedStream t = s;
        t.blocks[k].tweak = flip(t.blocks[k].tweak);
        ASSERT_NE(tag_for_stream(ctx, t, j), base);
      }
    }
  }
}

TEST(EngineTest, KeystreamIsLocal) {
  // Changing one fragment leaves every earlier ciphertext byte unchanged.
  std::mt19937_64 rng(35);
  for (const BackendProfile* prof : real_profiles()) {
    const std::size_t c = prof->chain_size();
    const EtsContext ctx(*prof, seq(3, 20));
    for (int i = 0; i < 100; ++i) {
      const Bytes ad = random_bytes(rng, rng() % 200);
      Bytes m = random_bytes(rng, 2 * c + rng() % (4 * c));
      const std::size_t pos = rng() % m.size();
      const EncryptionResult a = enc(ctx, ad, m);
      m[pos] ^= 0x01;
      const EncryptionResult b = enc(ctx, ad, m);
      const std::size_t frag_start = (pos / c) * c;
      for (std::size_t t = 0; t < frag_start; ++t) ASSERT_EQ(a.ciphertext[t], b.ciphertext[t]);
      ASSERT_NE(a.ciphertext[pos], b.ciphertext[pos]);
      ASSERT_NE(a.tag, b.tag);
    }
  }
}

TEST(EngineTest, TamperingFailsAuthentication) {
  std::mt19937_64 rng(36);
  for (const BackendProfile* prof : real_profiles()) {
    const EtsContext ctx(*prof, seq(9, 32));
    for (int i = 0; i < 100; ++i) {
      const Bytes ad = random_bytes(rng, 1 + rng() % 200);
      const Bytes m = random_bytes(rng, 1 + rng() % 200);
      const EncryptionResult r = enc(ctx, ad, m);
      Bytes ct = r.ciphertext;
      ct[rng() % ct.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
      EXPECT_THROW(dec(ctx, r.tag, ad, ct), AuthenticationError);
      Bytes ad2 = ad;
      ad2[rng() % ad2.size()] ^= 0x80;
      EXPECT_THROW(dec(ctx, r.tag, ad2, r.ciphertext), AuthenticationError);
      Bytes tag = r.tag;
      tag[rng() % tag.size()] ^= 0x04;
      EXPECT_THROW(dec(ctx, tag, ad, r.ciphertext), AuthenticationError);
      Bytes shorter(r.ciphertext.begin(), r.ciphertext.end() - 1);
      EXPECT_THROW(dec(ctx, r.tag, ad, shorter), AuthenticationError);
      Bytes longer = r.ciphertext;
      longer.push_back(0);
      EXPECT_THROW(dec(ctx, r.tag, ad, longer), AuthenticationError);
    }
  }
}

TEST(EngineTest, DifferentKeysDisagree) {
  const EtsContext a(BackendProfile::blake2b(), seq(1, 32));
  const EtsContext b(BackendProfile::blake2b(), seq(2, 32));
  const EncryptionResult r = enc(a, as_bytes("ad"), as_bytes("message"));
  EXPECT_NE(r.tag, enc(b, as_bytes("ad"), as_bytes("message")).tag);
  EXPECT_THROW(dec(b, r.tag, as_bytes("ad"), r.ciphertext), AuthenticationError);
}

TEST(EngineTest, RecoverReturnsPlaintextAndTag) {
  const EtsContext ctx(BackendProfile::sha512(), seq(5, 40));
  const EncryptionResult r = enc(ctx, as_bytes("a"), as_bytes("secret message"));
  const EncryptionResult back = recover(ctx, as_bytes("a"), r.ciphertext);
  EXPECT_EQ(back.tag, r.tag);
  EXPECT_EQ(back.ciphertext, str("secret message"));
}

TEST(EngineTest, ShortTagsAreTruncations) {
  const EtsContext full(BackendProfile::sha256(), seq(1, 8), 32);
  const EtsContext shortened(BackendProfile::sha256(), seq(1, 8), 12);
  const Bytes t32 = enc(full, as_bytes("x"), as_bytes("y")).tag;
  const EncryptionResult r = enc(shortened, as_bytes("x"), as_bytes("y"));
  EXPECT_EQ(r.tag, Bytes(t32.begin(), t32.begin() + 12));
  EXPECT_EQ(dec(shortened, r.tag, as_bytes("x"), r.ciphertext), str("y"));
  EXPECT_THROW(dec(shortened, t32, as_bytes("x"), r.ciphertext), ParameterError);
  EXPECT_THROW(dec(full, r.tag, as_bytes("x"), r.ciphertext), ParameterError);
}

TEST(EngineTest, ContextValidation) {
  EXPECT_THROW(EtsContext(BackendProfile::sha256(), {}), ParameterError);
  EXPECT_THROW(EtsContext(BackendProfile::sha256(), Bytes(33)), ParameterError);
  EXPECT_NO_THROW(EtsContext(BackendProfile::sha256(), Bytes(32)));
  EXPECT_NO_THROW(EtsContext(BackendProfile::sha512(), Bytes(64)));
  EXPECT_THROW(EtsContext(BackendProfile::toy(), Bytes(5)), ParameterError);
  EXPECT_THROW(EtsContext(BackendProfile::sha256(), Bytes(8), 0), ParameterError);
  EXPECT_THROW(EtsContext(BackendProfile::sha256(), Bytes(8), 33), ParameterError);
  EXPECT_NO_THROW(EtsContext(BackendProfile::blake2b(), Bytes(8), 64));
  EXPECT_THROW(EtsContext(BackendProfile::geometry(32, 64, 8), Bytes(8)), ParameterError);
}

TEST(EngineTest, CopiedContextBehavesIdentically) {
  const EtsContext a(BackendProfile::toy(), from_hex("11223344"));
  const EtsContext b(a);
  EXPECT_EQ(enc(a, {}, from_hex("41")).tag, enc(b, {}, from_hex("41")).tag);
  EXPECT_EQ(b.tag_length(), 4u);
}

TEST(EngineTest, ObserverSeesPayloadCopies) {
  const EtsContext ctx(BackendProfile::sha256(), seq(1, 8));
  std::size_t payload_bytes = 0;
  enc(ctx, seq(0, 10), seq(0, 100), [&](const CopyRecord& r) {
    if (r.source == CopyRecord::Source::kPayload) payload_bytes += r.bytes_read;
  });
  EXPECT_EQ(payload_bytes, 100u);
}

}  // namespace
}  // namespace ets

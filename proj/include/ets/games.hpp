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

// SAFE, INT and IND games for encrypt-to-self schemes, with a small family of
// built-in adversaries.
//
// The games run against the abstract Scheme interface, so a deliberately
// broken scheme can be plugged in to confirm that the harness detects wins.
// Every game samples its key from a seeded generator and is reproducible.
//
// Oracle semantics: a failing dec() is reported to the adversary as kFailure;
// the authentic (ad, ct) pair is answered with kSuppressed, never with the
// plaintext. A win ends the game immediately.

#ifndef ETS_GAMES_HPP_
#define ETS_GAMES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "ets/backend.hpp"
#include "ets/bytes.hpp"
#include "ets/engine.hpp"

namespace ets {

class Scheme {
 public:
  virtual ~Scheme() = default;
  virtual std::string_view name() const = 0;
  virtual std::size_t key_length() const = 0;
  virtual EncryptionResult enc(ByteView key, ByteView ad, ByteView m) const = 0;
  // Throws on failure.
  virtual Bytes dec(ByteView key, ByteView tag, ByteView ad, ByteView ct) const = 0;
};

class EtsScheme : public Scheme {
 public:
  explicit EtsScheme(BackendProfile profile, std::size_t key_length = 0,
                     std::optional<std::size_t> tag_length = std::nullopt);

  std::string_view name() const override { return profile_.name(); }
  std::size_t key_length() const override { return key_length_; }
  EncryptionResult enc(ByteView key, ByteView ad, ByteView m) const override;
  Bytes dec(ByteView key, ByteView tag, ByteView ad, ByteView ct) const override;

 protected:
  EtsContext context(ByteView key) const {
    return EtsContext(profile_, key, tag_length_);
  }

 private:
  BackendProfile profile_;
  std::size_t key_length_;
  std::optional<std::size_t> tag_length_;
};

// Negative control: decrypts like EtsScheme but never checks the tag.
class SaboteurScheme : public EtsScheme {
 public:
  using EtsScheme::EtsScheme;
  std::string_view name() const override { return "saboteur"; }
  Bytes dec(ByteView key, ByteView tag, ByteView ad, ByteView ct) const override;
};

enum class GameId { kSafe, kInt, kInd };

struct OracleAnswer {
  enum class Status { kMessage, kSuppressed, kFailure };
  Status status = Status::kFailure;
  Bytes message;
};

struct QueryRecord {
  Bytes ad;
  Bytes ct;
  OracleAnswer answer;
};

class GameTranscript {
 public:
  explicit GameTranscript(GameId game) : game_(game) {}

  GameId game() const { return game_; }
  bool finished() const { return outcome_.has_value(); }
  bool outcome() const;
  // Throws std::logic_error if already set.
  void set_outcome(bool value);
  void log(QueryRecord record) { queries_.push_back(std::move(record)); }
  const std::vector<QueryRecord>& queries() const { return queries_; }

  Bytes ad;
  Bytes message;  // m, or m_b in IND
  Bytes m0, m1;   // IND only
  Bytes ct;
  int bit = -1;   // IND only

 private:
  GameId game_;
  std::vector<QueryRecord> queries_;
  std::optional<bool> outcome_;
};

class DecOracle;

// What the adversary sees. `key` is empty in IND; m0/m1 are empty outside
// IND.
struct Challenge {
  ByteView ad;
  ByteView ct;
  ByteView key;
  ByteView m0;
  ByteView m1;
};

using Rng = std::mt19937_64;
using Adversary = std::function<void(const Challenge&, DecOracle&, Rng&)>;
using Distinguisher = std::function<bool(const Challenge&, DecOracle&, Rng&)>;

class DecOracle {
 public:
  OracleAnswer query(ByteView ad, ByteView ct);
  std::size_t query_count() const { return transcript_.queries().size(); }

 private:
  friend struct GameRunner;
  DecOracle(const Scheme& scheme, ByteView key, ByteView tag,
            GameTranscript& transcript)
      : scheme_(scheme), key_(key), tag_(tag), transcript_(transcript) {}

  const Scheme& scheme_;
  ByteView key_;
  ByteView tag_;
  GameTranscript& transcript_;
};

bool msg_equiv(ByteView m0, ByteView m1);

GameTranscript play_safe(const Scheme& scheme, ByteView ad, ByteView m,
                         const Adversary& adversary, std::uint64_t seed);
GameTranscript play_int(const Scheme& scheme, ByteView ad, ByteView m,
                        const Adversary& adversary, std::uint64_t seed);
GameTranscript play_ind(const Scheme& scheme, int b, ByteView ad, ByteView m0,
                        ByteView m1, const Distinguisher& adversary,
                        std::uint64_t seed);

inline bool run_safe(const Scheme& s, ByteView ad, ByteView m,
                     const Adversary& a, std::uint64_t seed) {
  return play_safe(s, ad, m, a, seed).outcome();
}
inline bool run_int(const Scheme& s, ByteView ad, ByteView m,
                    const Adversary& a, std::uint64_t seed) {
  return play_int(s, ad, m, a, seed).outcome();
}
inline bool run_ind(const Scheme& s, int b, ByteView ad, ByteView m0,
                    ByteView m1, const Distinguisher& a, std::uint64_t seed) {
  return play_ind(s, b, ad, m0, m1, a, seed).outcome();
}

namespace adversaries {

// Queries the authentic pair once.
Adversary replay();
Adversary silent();
// Makes `count` queries with random ad/ct of random lengths up to 2 * |ct| + 8.
Adversary random_queries(std::size_t count);

enum class Mutation {
  kFlipCiphertextBit,
  kFlipAdBit,
  kTruncateCiphertext,
  kExtendCiphertext,
  kAppendAd,
};
// Applies one mutation to the authentic pair and submits it. Bit positions
// are drawn from the game's generator. Mutations that need a nonempty input
// fall back to appending a byte.
Adversary mutate(Mutation kind);

Distinguisher constant(bool bit);
Distinguisher random_guess();

}  // namespace adversaries

}  // namespace ets

#endif  // ETS_GAMES_HPP_

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

#include "ets/games.hpp"

#include <algorithm>
#include <stdexcept>

namespace ets {
namespace {

// Unwinds the adversary once the outcome is decided.
struct GameStop {};

bool same(ByteView a, ByteView b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

Bytes random_bytes(Rng& rng, std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

}  // namespace

EtsScheme::EtsScheme(BackendProfile profile, std::size_t key_length,
                     std::optional<std::size_t> tag_length)
    : profile_(std::move(profile)),
      key_length_(key_length != 0 ? key_length
                                  : std::min<std::size_t>(32, profile_.max_key_length())),
      tag_length_(tag_length) {
  // Validates the parameters once, up front.
  context(Bytes(key_length_, 0));
}

EncryptionResult EtsScheme::enc(ByteView key, ByteView ad, ByteView m) const {
  return ets::enc(context(key), ad, m);
}

Bytes EtsScheme::dec(ByteView key, ByteView tag, ByteView ad, ByteView ct) const {
  return ets::dec(context(key), tag, ad, ct);
}

Bytes SaboteurScheme::dec(ByteView key, ByteView, ByteView ad, ByteView ct) const {
  return recover(context(key), ad, ct).ciphertext;
}

bool GameTranscript::outcome() const {
  if (!outcome_) throw std::logic_error("game has no outcome yet");
  return *outcome_;
}

void GameTranscript::set_outcome(bool value) {
  if (outcome_) throw std::logic_error("game outcome already set");
  outcome_ = value;
}

bool msg_equiv(ByteView m0, ByteView m1) { return m0.size() == m1.size(); }

struct GameRunner {
  static DecOracle make_oracle(const Scheme& scheme, ByteView key, ByteView tag,
                               GameTranscript& t) {
    return DecOracle(scheme, key, tag, t);
  }
};

OracleAnswer DecOracle::query(ByteView ad, ByteView ct) {
  if (transcript_.finished()) throw GameStop{};

  OracleAnswer answer;
  try {
    answer.message = scheme_.dec(key_, tag_, ad, ct);
    answer.status = OracleAnswer::Status::kMessage;
  } catch (const std::exception&) {
    answer.status = OracleAnswer::Status::kFailure;
  }

  const bool authentic = same(ad, transcript_.ad) && same(ct, transcript_.ct);
  bool stop = false;
  if (answer.status == OracleAnswer::Status::kMessage) {
    switch (transcript_.game()) {
      case GameId::kSafe:
        // Promise m' = m on the authentic pair.
        if (authentic && !same(answer.message, transcript_.message)) stop = true;
        break;
      case GameId::kInt:
        // Reward any other pair that decrypts.
        if (!authentic) stop = true;
        break;
      case GameId::kInd:
        break;
    }
    if (authentic) {
      secure_wipe(answer.message);
      answer.message.clear();
      answer.status = OracleAnswer::Status::kSuppressed;
    }
  }

  transcript_.log({Bytes(ad.begin(), ad.end()), Bytes(ct.begin(), ct.end()), answer});
  if (stop) {
    transcript_.set_outcome(true);
    throw GameStop{};
  }
  return answer;
}

namespace {

GameTranscript play_auth_game(GameId id, const Scheme& scheme, ByteView ad,
                              ByteView m, const Adversary& adversary,
                              std::uint64_t seed) {
  Rng rng(seed);
  GameTranscript t(id);
  const Bytes key = random_bytes(rng, scheme.key_length());
  EncryptionResult r = scheme.enc(key, ad, m);
  t.ad.assign(ad.begin(), ad.end());
  t.message.assign(m.begin(), m.end());
  t.ct = r.ciphertext;

  DecOracle oracle = GameRunner::make_oracle(scheme, key, r.tag, t);
  try {
    adversary(Challenge{t.ad, t.ct, key, {}, {}}, oracle, rng);
  } catch (const GameStop&) {
  }
  if (!t.finished()) t.set_outcome(false);
  return t;
}

}  // namespace

GameTranscript play_safe(const Scheme& scheme, ByteView ad, ByteView m,
                         const Adversary& adversary, std::uint64_t seed) {
  return play_auth_game(GameId::kSafe, scheme, ad, m, adversary, seed);
}

GameTranscript play_int(const Scheme& scheme, ByteView ad, ByteView m,
                        const Adversary& adversary, std::uint64_t seed) {
  return play_auth_game(GameId::kInt, scheme, ad, m, adversary, seed);
}

GameTranscript play_ind(const Scheme& scheme, int b, ByteView ad, ByteView m0,
                        ByteView m1, const Distinguisher& adversary,
                        std::uint64_t seed) {
  if (b != 0 && b != 1) throw ParameterError("challenge bit must be 0 or 1");
  GameTranscript t(GameId::kInd);
  t.bit = b;
  t.ad.assign(ad.begin(), ad.end());
  t.m0.assign(m0.begin(), m0.end());
  t.m1.assign(m1.begin(), m1.end());
  if (!msg_equiv(m0, m1)) {
    t.set_outcome(false);
    return t;
  }

  Rng rng(seed);
  const Bytes key = random_bytes(rng, scheme.key_length());
  t.message = b == 0 ? t.m0 : t.m1;
  EncryptionResult r = scheme.enc(key, ad, t.message);
  t.ct = r.ciphertext;

  DecOracle oracle = GameRunner::make_oracle(scheme, key, r.tag, t);
  bool guess = false;
  try {
    guess = adversary(Challenge{t.ad, t.ct, {}, t.m0, t.m1}, oracle, rng);
  } catch (const GameStop&) {
  }
  if (!t.finished()) t.set_outcome(guess);
  return t;
}

namespace adversaries {

Adversary replay() {
  return [](const Challenge& ch, DecOracle& dec, Rng&) { dec.query(ch.ad, ch.ct); };
}

Adversary silent() {
  return [](const Challenge&, DecOracle&, Rng&) {};
}

Adversary random_queries(std::size_t count) {
  return [count](const Challenge& ch, DecOracle& dec, Rng& rng) {
    const std::size_t bound = 2 * ch.ct.size() + 8;
    for (std::size_t q = 0; q < count; ++q) {
      const Bytes ad = random_bytes(rng, rng() % (bound + 1));
      const Bytes ct = random_bytes(rng, rng() % (bound + 1));
      dec.query(ad, ct);
    }
  };
}

Adversary mutate(Mutation kind) {
  return [kind](const Challenge& ch, DecOracle& dec, Rng& rng) {
    Bytes ad(ch.ad.begin(), ch.ad.end());
    Bytes ct(ch.ct.begin(), ch.ct.end());
    switch (kind) {
      case Mutation::kFlipCiphertextBit:
        if (ct.empty()) {
          ct.push_back(static_cast<std::uint8_t>(rng()));
        } else {
          const std::size_t bit = rng() % (8 * ct.size());
          ct[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        }
        break;
      case Mutation::kFlipAdBit:
        if (ad.empty()) {
          ad.push_back(static_cast<std::uint8_t>(rng()));
        } else {
          const std::size_t bit = rng() % (8 * ad.size());
          ad[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        }
        break;
      case Mutation::kTruncateCiphertext:
        if (ct.empty()) {
          ct.push_back(0);
        } else {
          ct.pop_back();
        }
        break;
      case Mutation::kExtendCiphertext:
        ct.push_back(static_cast<std::uint8_t>(rng()));
        break;
      case Mutation::kAppendAd:
        ad.push_back(static_cast<std::uint8_t>(rng()));
        break;
    }
    dec.query(ad, ct);
  };
}

Distinguisher constant(bool bit) {
  return [bit](const Challenge&, DecOracle&, Rng&) { return bit; };
}

Distinguisher random_guess() {
  return [](const Challenge&, DecOracle&, Rng& rng) { return (rng() & 1) != 0; };
}

}  // namespace adversaries

}  // namespace ets

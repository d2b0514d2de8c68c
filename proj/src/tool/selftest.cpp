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

#include "ets/tool/selftest.hpp"

#include <functional>
#include <memory>
#include <random>
#include <map>

#include "ets/backend.hpp"
#include "ets/encoding.hpp"
#include "ets/engine.hpp"
#include "ets/games.hpp"
#include "ets/kat.hpp"

namespace ets::tool {
namespace {

using CheckFn = std::function<std::string()>;  // empty string means pass

std::string expect_hex(const Bytes& got, const char* want, const char* what) {
  if (to_hex(got) == want) return {};
  return std::string(what) + ": got " + to_hex(got);
}

std::string check_kats() {
  const std::pair<Bytes, const char*> cases[] = {
      {kat::sha256(as_bytes("")),
       "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"},
      {kat::sha256(as_bytes("abc")),
       "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"},
      {kat::sha512(as_bytes("abc")),
       "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a"
       "2192992a274fc1a836ba3c23a3feebbd454d4423643ce80e2a9ac94fa54ca49f"},
      {kat::blake2b512(as_bytes("abc")),
       "ba80a53f981c4d0d6a2797b69f12f6e94c212f14685ac4b74b12bb6fdbffa2d1"
       "7d87c5392aab792dc252d5de4533cc9518d38aa8dbf1925ab92386edd4009923"},
      {toy_compress(from_hex("0102030405060708"), Tweak::kZero, from_hex("10203040")),
       "16293c4f"},
  };
  for (const auto& [got, want] : cases) {
    if (auto err = expect_hex(got, want, "KAT"); !err.empty()) return err;
  }
  return {};
}

// Every (ad, m) shape up to |ad| <= 20 and |m| <= 12 on the toy profile,
// with contents drawn from {0x01, 0x02} and the padding symbols at the tail.
std::string check_toy_sweep() {
  const BackendProfile& toy = BackendProfile::toy();
  const std::uint8_t tails[] = {0x01, 0x00, 0x80, 0xa5};
  std::map<Bytes, std::pair<Bytes, Bytes>> seen;
  for (std::size_t a = 0; a <= 20; ++a) {
    for (std::size_t m = 0; m <= 12; ++m) {
      for (std::uint8_t ta : tails) {
        for (std::uint8_t tm : tails) {
          Bytes ad(a), msg(m);
          for (std::size_t i = 0; i < a; ++i) ad[i] = (i % 3 == 0) ? 0x02 : 0x01;
          for (std::size_t i = 0; i < m; ++i) msg[i] = (i % 2 == 0) ? 0x01 : 0x02;
          if (a > 0) ad.back() = ta;
          if (m > 0) msg.back() = tm;
          const EncodedStream s = encode(toy, ad, msg);
          if (s != encode_reference(toy, ad, msg)) return "encode differs from reference";
          const auto [ad2, m2] = decode(toy, s);
          if (ad2 != ad || m2 != msg) return "decode(encode) is not the identity";
          const auto [it, fresh] = seen.emplace(serialize_stream(s), std::make_pair(ad, msg));
          if (!fresh && it->second != std::make_pair(ad, msg)) {
            return "two inputs share an encoding";
          }
        }
      }
    }
  }
  return {};
}

std::string check_golden() {
  const EtsContext ctx(BackendProfile::toy(), from_hex("11223344"));
  const EncryptionResult r = enc(ctx, {}, from_hex("41"));
  if (to_hex(r.tag) != "e24ef591" || to_hex(r.ciphertext) != "d0") {
    return "toy golden vector mismatch: " + to_hex(r.tag) + "/" + to_hex(r.ciphertext);
  }
  return {};
}

std::string check_engine(const Scheme& scheme, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto bytes = [&](std::size_t n) {
    Bytes b(n);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    return b;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const Bytes key = bytes(scheme.key_length());
    const Bytes ad = bytes(rng() % 300);
    const Bytes m = bytes(rng() % 600);
    const EncryptionResult r = scheme.enc(key, ad, m);
    if (r.ciphertext.size() != m.size()) return "ciphertext length differs from message";
    if (scheme.dec(key, r.tag, ad, r.ciphertext) != m) return "roundtrip failed";

    Bytes ct = r.ciphertext;
    if (ct.empty()) ct.push_back(0);
    else ct[rng() % ct.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
    try {
      scheme.dec(key, r.tag, ad, ct);
      return "tampered ciphertext accepted";
    } catch (const AuthenticationError&) {
    }
  }
  return {};
}

std::string check_games(const Scheme& scheme, std::uint64_t seed) {
  const Bytes ad(24, 0x61);
  const Bytes m(100, 0x62);
  if (run_safe(scheme, ad, m, adversaries::replay(), seed)) return "SAFE game won by replay";
  if (run_safe(scheme, ad, m, adversaries::random_queries(20), seed)) {
    return "SAFE game won by random queries";
  }
  using adversaries::Mutation;
  for (Mutation kind : {Mutation::kFlipCiphertextBit, Mutation::kFlipAdBit,
                        Mutation::kTruncateCiphertext, Mutation::kExtendCiphertext,
                        Mutation::kAppendAd}) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      if (run_int(scheme, ad, m, adversaries::mutate(kind), seed + s)) {
        return "INT game won by a mutation adversary";
      }
    }
  }
  return {};
}

}  // namespace

bool SelftestReport::passed() const { return first_failure() == nullptr; }

const SelftestCheck* SelftestReport::first_failure() const {
  for (const SelftestCheck& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  std::vector<std::pair<std::string, std::unique_ptr<Scheme>>> schemes;
  for (const BackendProfile* p : {&BackendProfile::sha256(), &BackendProfile::sha512(),
                                  &BackendProfile::blake2b()}) {
    std::unique_ptr<Scheme> scheme;
    if (options.inject_saboteur) {
      scheme = std::make_unique<SaboteurScheme>(*p);
    } else {
      scheme = std::make_unique<EtsScheme>(*p);
    }
    schemes.emplace_back(std::string(p->name()), std::move(scheme));
  }

  std::vector<std::pair<std::string, CheckFn>> plan = {
      {"compression KATs", check_kats},
      {"toy encode/decode sweep", check_toy_sweep},
      {"toy golden vector", check_golden},
  };
  std::uint64_t seed = 1;
  for (const auto& [label, s] : schemes) {
    const Scheme* scheme = s.get();
    const std::uint64_t this_seed = seed++;
    plan.emplace_back("engine roundtrip/tamper " + label,
                      [scheme, this_seed] { return check_engine(*scheme, this_seed); });
    plan.emplace_back("SAFE/INT games " + label,
                      [scheme, this_seed] { return check_games(*scheme, this_seed); });
  }

  SelftestReport report;
  for (auto& [name, fn] : plan) {
    SelftestCheck check{name, false, {}};
    try {
      check.detail = fn();
      check.passed = check.detail.empty();
    } catch (const std::exception& e) {
      check.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace ets::tool

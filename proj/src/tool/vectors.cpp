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

#include "ets/tool/vectors.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "ets/encoding.hpp"
#include "ets/engine.hpp"

namespace ets::tool {
namespace {

Bytes draw(std::mt19937_64& rng, std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng() >> 56);
  return out;
}

}  // namespace

std::vector<VectorCase> vector_grid(const BackendProfile& p) {
  const std::size_t c = p.chain_size();
  const std::size_t d = p.block_size();
  const std::size_t mav = p.mav();
  const std::size_t kmax = p.max_key_length();
  const std::size_t kmid = kmax < 16 ? kmax : 16;
  return {
      {"empty-ad-empty-m", 0, 0, kmax},
      {"empty-m-ad-whole-blocks", 2 * d, 0, 1},
      {"empty-m-ad-padded", d + 1, 0, kmid},
      {"empty-ad-r0", 0, c, kmax},
      {"empty-ad-r1", 0, 1, 1},
      {"r0-two-fragments", 16, 2 * c, kmid},
      {"r-multiple-of-mav", 16, 3 * c + mav, kmax},
      {"r1-padded", 16, 2 * c + 1, kmid},
      {"j-eq-n-ad-exact-boundary", 2 * d - c, c, kmax},
      {"j-lt-n", 4 * d, c, kmid},
      {"ad-ends-mid-region", d + 1, 2 * c, 1},
      {"ad-ends-on-region-boundary", d, 2 * c, kmax},
      {"j-lt-n-padded", 3 * d, c + 3, kmid},
      {"long", 100, 1000, kmax},
  };
}

std::vector<VectorRecord> generate_vectors(
    const std::vector<BackendProfile>& profiles, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VectorRecord> out;
  for (const BackendProfile& p : profiles) {
    for (const VectorCase& vc : vector_grid(p)) {
      VectorRecord rec;
      rec.profile = std::string(p.name());
      rec.key = draw(rng, vc.key_len);
      rec.ad = draw(rng, vc.ad_len);
      rec.m = draw(rng, vc.m_len);
      const EtsContext ctx(p, rec.key);
      EncryptionResult r = enc(ctx, rec.ad, rec.m);
      rec.bt = std::move(r.tag);
      rec.ct = std::move(r.ciphertext);
      rec.stream = serialize_stream(encode(p, rec.ad, rec.m));
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::string format_vectors(const std::vector<VectorRecord>& records,
                           std::uint64_t seed) {
  std::ostringstream os;
  os << "# ets test vectors, seed=" << seed << ", records=" << records.size() << "\n";
  for (const VectorRecord& r : records) {
    os << "profile=" << r.profile << " key=" << to_hex(r.key)
       << " ad=" << to_hex(r.ad) << " m=" << to_hex(r.m)
       << " bt=" << to_hex(r.bt) << " ct=" << to_hex(r.ct)
       << " stream=" << to_hex(r.stream) << "\n";
  }
  return os.str();
}

std::vector<VectorRecord> parse_vectors(const std::string& text) {
  std::vector<VectorRecord> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string field;
    VectorRecord rec;
    int seen = 0;
    while (fields >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw ParameterError("malformed vector field");
      const std::string name = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (name == "profile") {
        rec.profile = value;
      } else if (name == "key") {
        rec.key = from_hex(value);
      } else if (name == "ad") {
        rec.ad = from_hex(value);
      } else if (name == "m") {
        rec.m = from_hex(value);
      } else if (name == "bt") {
        rec.bt = from_hex(value);
      } else if (name == "ct") {
        rec.ct = from_hex(value);
      } else if (name == "stream") {
        rec.stream = from_hex(value);
      } else {
        throw ParameterError("unknown vector field " + name);
      }
      ++seen;
    }
    if (seen != 7) throw ParameterError("vector line needs 7 fields");
    out.push_back(std::move(rec));
  }
  return out;
}

std::size_t verify_vectors(const std::vector<VectorRecord>& records) {
  std::size_t line = 0;
  for (const VectorRecord& r : records) {
    ++line;
    const auto profile = BackendProfile::from_name(r.profile);
    if (!profile) throw std::runtime_error("record " + std::to_string(line) + ": unknown profile");
    const EtsContext ctx(*profile, r.key, r.bt.size());
    const std::string where = "record " + std::to_string(line) + " (" + r.profile + ")";
    try {
      if (dec(ctx, r.bt, r.ad, r.ct) != r.m) throw std::runtime_error(where + ": dec mismatch");
    } catch (const AuthenticationError&) {
      throw std::runtime_error(where + ": tag does not verify");
    }
    const EncryptionResult again = enc(ctx, r.ad, r.m);
    if (again.tag != r.bt || again.ciphertext != r.ct) {
      throw std::runtime_error(where + ": enc mismatch");
    }
    if (serialize_stream(encode(*profile, r.ad, r.m)) != r.stream) {
      throw std::runtime_error(where + ": stream mismatch");
    }
  }
  return records.size();
}

}  // namespace ets::tool

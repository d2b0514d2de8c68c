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

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "ets/encoding.hpp"

namespace ets::tool {
namespace {

std::vector<BackendProfile> all_profiles() {
  return {BackendProfile::sha256(), BackendProfile::sha512(), BackendProfile::blake2b(),
          BackendProfile::toy()};
}

TEST(VectorGridTest, CoversLayoutBranches) {
  for (const BackendProfile& prof : all_profiles()) {
    const auto grid = vector_grid(prof);
    ASSERT_EQ(grid.size(), kGridSize);
    bool empty_ad = false, empty_m = false, full_tail = false, padded_tail = false,
         j_below_n = false, j_is_n = false, ad_full = false, ad_short = false;
    for (const VectorCase& vc : grid) {
      ASSERT_GE(vc.key_len, 1u);
      ASSERT_LE(vc.key_len, prof.max_key_length());
      const LayoutPlan p = plan_layout(prof, vc.ad_len, vc.m_len);
      empty_ad |= vc.ad_len == 0;
      empty_m |= vc.m_len == 0;
      if (vc.m_len > 0) {
        full_tail |= !p.msg_padded;
        padded_tail |= p.msg_padded && p.r % prof.mav() == 0;
        j_below_n |= p.j < p.n;
        j_is_n |= p.j == p.n;
      }
      ad_full |= !p.ad_padded;
      ad_short |= p.ad_padded && vc.ad_len > 0;
    }
    EXPECT_TRUE(empty_ad && empty_m && full_tail && padded_tail && j_below_n && j_is_n &&
                ad_full && ad_short)
        << prof.name();
  }
}

TEST(VectorsTest, GenerationIsDeterministicAndSeeded) {
  const auto a = generate_vectors(all_profiles(), kDefaultVectorSeed);
  const auto b = generate_vectors(all_profiles(), kDefaultVectorSeed);
  const auto c = generate_vectors(all_profiles(), kDefaultVectorSeed + 1);
  ASSERT_EQ(a.size(), kGridSize * 4);
  EXPECT_EQ(format_vectors(a, kDefaultVectorSeed), format_vectors(b, kDefaultVectorSeed));
  EXPECT_NE(format_vectors(a, kDefaultVectorSeed), format_vectors(c, kDefaultVectorSeed));
}

TEST(VectorsTest, RecordsAreDistinctAndVerify) {
  const auto records = generate_vectors(all_profiles(), 99);
  // SHA-512 and BLAKE2b share a geometry, so streams are unique per profile.
  std::set<std::pair<std::string, Bytes>> streams;
  for (const auto& r : records) streams.emplace(r.profile, r.stream);
  EXPECT_EQ(streams.size(), records.size());
  EXPECT_EQ(verify_vectors(records), records.size());
}

TEST(VectorsTest, FormatParseRoundTrip) {
  const auto records = generate_vectors({BackendProfile::toy(), BackendProfile::sha256()}, 5);
  const std::string text = format_vectors(records, 5);
  EXPECT_EQ(text[0], '#');
  const auto parsed = parse_vectors(text);
  ASSERT_EQ(parsed.size(), records.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    EXPECT_EQ(parsed[i].profile, records[i].profile);
    EXPECT_EQ(parsed[i].key, records[i].key);
    EXPECT_EQ(parsed[i].ad, records[i].ad);
    EXPECT_EQ(parsed[i].m, records[i].m);
    EXPECT_EQ(parsed[i].bt, records[i].bt);
    EXPECT_EQ(parsed[i].ct, records[i].ct);
    EXPECT_EQ(parsed[i].stream, records[i].stream);
  }
  EXPECT_EQ(verify_vectors(parsed), parsed.size());
}

TEST(VectorsTest, VerifyNamesTheFirstMismatch) {
  auto records = generate_vectors({BackendProfile::sha512()}, 1);
  records[3].bt[0] ^= 1;
  try {
    verify_vectors(records);
    FAIL() << "expected a mismatch";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("sha512"), std::string::npos) << e.what();
  }
  records = generate_vectors({BackendProfile::toy()}, 1);
  records[0].stream.back() ^= 1;
  EXPECT_THROW(verify_vectors(records), std::runtime_error);
}

TEST(VectorsTest, ParseRejectsMalformedLines) {
  EXPECT_TRUE(parse_vectors("# only a comment\n\n").empty());
  EXPECT_THROW(parse_vectors("profile=toy key=zz ad= m= bt= ct= stream=\n"), ParameterError);
  EXPECT_THROW(parse_vectors("profile=toy key=01 ad= m= bt= ct=\n"), ParameterError);
  EXPECT_THROW(parse_vectors("garbage\n"), ParameterError);
}

}  // namespace
}  // namespace ets::tool

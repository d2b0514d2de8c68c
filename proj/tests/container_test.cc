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

#include "ets/tool/container.hpp"

#include <gtest/gtest.h>

namespace ets::tool {
namespace {

TEST(ContainerTest, SerializesHeaderTagAndCiphertext) {
  const Container c{BackendId::kBlake2b, from_hex("aabbcc"), from_hex("0102")};
  EXPECT_EQ(to_hex(serialize_container(c)), "4554533103030000aabbcc0102");
}

TEST(ContainerTest, ParseInvertsSerialize) {
  for (BackendId id : {BackendId::kSha256, BackendId::kSha512, BackendId::kBlake2b}) {
    const Container c{id, Bytes(32, 7), Bytes(1000, 9)};
    EXPECT_EQ(parse_container(serialize_container(c)), c);
  }
  const Container empty_ct{BackendId::kSha256, Bytes(1, 1), {}};
  EXPECT_EQ(parse_container(serialize_container(empty_ct)), empty_ct);
}

TEST(ContainerTest, RejectsMalformedInput) {
  EXPECT_THROW(parse_container(from_hex("45545331")), ParameterError);            // short
  EXPECT_THROW(parse_container(from_hex("4554533201010000aa")), ParameterError);  // magic
  EXPECT_THROW(parse_container(from_hex("45545331ff010000aa")), ParameterError);  // toy id
  EXPECT_THROW(parse_container(from_hex("4554533104010000aa")), ParameterError);  // unknown
  EXPECT_THROW(parse_container(from_hex("4554533101000000")), ParameterError);    // taglen 0
  EXPECT_THROW(parse_container(from_hex("4554533101210000")), ParameterError);    // 33 > c
  EXPECT_THROW(parse_container(from_hex("4554533101010100aa")), ParameterError);  // reserved
  EXPECT_THROW(parse_container(from_hex("4554533101040000aabb")), ParameterError);  // truncated
  EXPECT_NO_THROW(parse_container(from_hex("4554533102400000" + std::string(128, 'a'))));
}

TEST(ContainerTest, SerializeValidatesTag) {
  EXPECT_THROW(serialize_container({BackendId::kSha256, {}, {}}), ParameterError);
  EXPECT_THROW(serialize_container({BackendId::kSha256, Bytes(33), {}}), ParameterError);
  EXPECT_THROW(serialize_container({BackendId::kToy, Bytes(4), {}}), ParameterError);
}

TEST(ContainerTest, ProfileLookup) {
  EXPECT_EQ(container_profile(BackendId::kSha512).chain_size(), 64u);
  EXPECT_THROW(container_profile(BackendId::kToy), ParameterError);
}

}  // namespace
}  // namespace ets::tool

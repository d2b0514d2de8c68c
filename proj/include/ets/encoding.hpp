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

// Injective, alignment-preserving serialisation of (ad, payload) into a
// sequence of (block, tweak) pairs terminated by an offset selector.
//
// Block 1 carries only associated data. Blocks 2..j carry associated data in
// their front and one payload fragment in their last s_i bytes (s_i = c, or
// s for the final fragment). Blocks j+1..n carry associated data only. Every
// region boundary is a multiple of mav, so no byte of either input is ever
// moved to an address with a different alignment residue.

#ifndef ETS_ENCODING_HPP_
#define ETS_ENCODING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ets/backend.hpp"
#include "ets/bytes.hpp"

namespace ets {

// Termination symbol appended to padded associated data.
inline constexpr std::uint8_t kAdTerminator = 0x80;

struct LayoutPlan {
  std::size_t n = 0;          // number of blocks
  std::size_t j = 0;          // last payload-carrying block, 0 if payload empty
  std::size_t fragments = 0;  // payload fragments, j - 1 when payload nonempty
  std::size_t r = 0;          // |payload| mod c
  std::size_t s = 0;          // size of the final payload region
  bool msg_padded = false;
  bool ad_padded = false;
  std::size_t ad_capacity = 0;  // total ad-region bytes over all blocks

  // Size of the payload region of block i (1-based); 0 for ad-only blocks.
  std::size_t payload_region(std::size_t i, std::size_t c) const {
    if (i < 2 || i > j) return 0;
    return i < j ? c : s;
  }

  bool operator==(const LayoutPlan&) const = default;
};

LayoutPlan plan_layout(const BackendProfile& profile, std::size_t ad_len,
                       std::size_t payload_len);

struct Body {
  Bytes block;
  Tweak tweak = Tweak::kZero;
  bool operator==(const Body&) const = default;
};

// n >= 1 bodies followed by the final offset.
struct EncodedStream {
  std::vector<Body> blocks;
  OffsetSelector offset = OffsetSelector::kOmega0;
  bool operator==(const EncodedStream&) const = default;
};

// One region copy performed by the producer, reported to an optional
// observer. Offsets and region_length are multiples of mav; bytes_read falls
// short of region_length only where the input ends inside the region.
struct CopyRecord {
  enum class Source { kAd, kPayload };
  Source source;
  std::size_t source_offset;
  std::size_t block_index;  // 1-based
  std::size_t block_offset;
  std::size_t region_length;
  std::size_t bytes_read;
};
using CopyObserver = std::function<void(const CopyRecord&)>;

// Metadata for a produced block: where the payload bytes sit, excluding any
// padding or length byte.
struct BlockInfo {
  std::size_t index;  // 1-based
  Tweak tweak;
  std::size_t payload_offset;
  std::size_t payload_length;
};

// Online encoder. Reads ad and payload once, left to right, keeping only
// counters as state; each call to next() fills a caller-owned block.
class BlockProducer {
 public:
  BlockProducer(const BackendProfile& profile, ByteView ad, ByteView payload,
                CopyObserver observer = {});

  // Writes the next body into `block` (exactly d bytes). Returns nullopt once
  // all n bodies have been produced; final_offset() then holds the offset.
  std::optional<BlockInfo> next(MutableByteView block);

  OffsetSelector final_offset() const {
    return plan_.ad_padded ? OffsetSelector::kOmega1 : OffsetSelector::kOmega0;
  }
  const LayoutPlan& plan() const { return plan_; }

 private:
  void fill_ad(MutableByteView region, std::size_t block_offset);
  void fill_payload(MutableByteView region, std::size_t fragment_length,
                    std::size_t block_offset);

  const BackendProfile& profile_;
  ByteView ad_;
  ByteView payload_;
  CopyObserver observer_;
  LayoutPlan plan_;
  std::size_t index_ = 0;
  std::size_t ad_pos_ = 0;  // position in the padded ad stream
  std::size_t payload_pos_ = 0;
};

EncodedStream encode(const BackendProfile& profile, ByteView ad,
                     ByteView payload, CopyObserver observer = {});

// Straightforward materialise-and-slice encoder kept as an oracle for
// encode(); shares no code with BlockProducer.
EncodedStream encode_reference(const BackendProfile& profile, ByteView ad,
                               ByteView payload);

// Inverse of encode on its image. Throws DecodeError for anything else.
std::pair<Bytes, Bytes> decode(const BackendProfile& profile,
                               const EncodedStream& stream);

// Each body as tweak byte || block, then 0xff || offset selector.
Bytes serialize_stream(const EncodedStream& stream);
EncodedStream parse_stream(const BackendProfile& profile, ByteView bytes);

}  // namespace ets

#endif  // ETS_ENCODING_HPP_

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

#include "ets/encoding.hpp"

#include <algorithm>
#include <cstring>

namespace ets {
namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

LayoutPlan plan_layout(const BackendProfile& profile, std::size_t ad_len,
                       std::size_t payload_len) {
  const std::size_t c = profile.chain_size();
  const std::size_t d = profile.block_size();
  const std::size_t mav = profile.mav();

  LayoutPlan plan;
  if (payload_len == 0) {
    plan.n = std::max<std::size_t>(1, ceil_div(ad_len, d));
    plan.ad_capacity = plan.n * d;
  } else {
    plan.fragments = ceil_div(payload_len, c);
    plan.r = payload_len % c;
    plan.msg_padded = plan.r != 0;
    plan.s = plan.msg_padded ? (plan.r / mav + 1) * mav : c;
    plan.j = 1 + plan.fragments;
    const std::size_t through_j = d + (plan.fragments - 1) * (d - c) + (d - plan.s);
    const std::size_t extra = ad_len > through_j ? ceil_div(ad_len - through_j, d) : 0;
    plan.n = plan.j + extra;
    plan.ad_capacity = through_j + extra * d;
  }
  plan.ad_padded = ad_len < plan.ad_capacity;
  return plan;
}

BlockProducer::BlockProducer(const BackendProfile& profile, ByteView ad,
                             ByteView payload, CopyObserver observer)
    : profile_(profile),
      ad_(ad),
      payload_(payload),
      observer_(std::move(observer)),
      plan_(plan_layout(profile, ad.size(), payload.size())) {}

void BlockProducer::fill_ad(MutableByteView region, std::size_t block_offset) {
  const std::size_t len = region.size();
  const std::size_t avail =
      ad_pos_ < ad_.size() ? std::min(len, ad_.size() - ad_pos_) : 0;
  if (avail > 0) {
    std::memcpy(region.data(), ad_.data() + ad_pos_, avail);
    if (observer_) {
      observer_({CopyRecord::Source::kAd, ad_pos_, index_, block_offset, len, avail});
    }
  }
  if (avail < len) {
    std::memset(region.data() + avail, 0, len - avail);
    // The terminator sits at stream position |ad|, if that falls here.
    if (ad_pos_ + avail == ad_.size()) region[avail] = kAdTerminator;
  }
  ad_pos_ += len;
}

void BlockProducer::fill_payload(MutableByteView region,
                                 std::size_t fragment_length,
                                 std::size_t block_offset) {
  std::memcpy(region.data(), payload_.data() + payload_pos_, fragment_length);
  if (observer_) {
    observer_({CopyRecord::Source::kPayload, payload_pos_, index_, block_offset,
               region.size(), fragment_length});
  }
  payload_pos_ += fragment_length;
  if (fragment_length < region.size()) {
    std::memset(region.data() + fragment_length, 0, region.size() - fragment_length);
    region.back() = static_cast<std::uint8_t>(payload_.size() & 0xff);
  }
}

std::optional<BlockInfo> BlockProducer::next(MutableByteView block) {
  const std::size_t c = profile_.chain_size();
  const std::size_t d = profile_.block_size();
  if (block.size() != d) throw ParameterError("block buffer must be d bytes");
  if (index_ >= plan_.n) return std::nullopt;
  ++index_;

  const std::size_t payload_region = plan_.payload_region(index_, c);
  const std::size_t ad_region = d - payload_region;
  fill_ad(block.first(ad_region), 0);

  std::size_t fragment_length = 0;
  if (payload_region > 0) {
    fragment_length = (index_ == plan_.j && plan_.msg_padded) ? plan_.r : c;
    fill_payload(block.subspan(ad_region), fragment_length, ad_region);
  }

  Tweak tweak = Tweak::kZero;
  if (index_ == 1) {
    if (payload_.empty()) tweak = Tweak::kOne;
  } else {
    if (index_ == plan_.j && plan_.j < plan_.n) tweak = Tweak::kOne;
    if (index_ == plan_.n && plan_.msg_padded) tweak = Tweak::kOne;
  }
  return BlockInfo{index_, tweak, ad_region, fragment_length};
}

EncodedStream encode(const BackendProfile& profile, ByteView ad,
                     ByteView payload, CopyObserver observer) {
  BlockProducer producer(profile, ad, payload, std::move(observer));
  EncodedStream stream;
  stream.blocks.reserve(producer.plan().n);
  Bytes block(profile.block_size());
  while (auto info = producer.next(block)) {
    stream.blocks.push_back({block, info->tweak});
  }
  stream.offset = producer.final_offset();
  return stream;
}

EncodedStream encode_reference(const BackendProfile& profile, ByteView ad,
                               ByteView payload) {
  const std::size_t c = profile.chain_size();
  const std::size_t d = profile.block_size();
  const std::size_t mav = profile.mav();

  // Padded payload regions, one per fragment.
  std::vector<Bytes> payload_regions;
  for (std::size_t pos = 0; pos < payload.size(); pos += c) {
    const std::size_t take = std::min(c, payload.size() - pos);
    Bytes region(payload.begin() + pos, payload.begin() + pos + take);
    if (take < c) {
      const std::size_t s = (take / mav + 1) * mav;
      region.resize(s, 0);
      region.back() = static_cast<std::uint8_t>(payload.size() % 256);
    }
    payload_regions.push_back(std::move(region));
  }
  const bool msg_padded = !payload.empty() && payload.size() % c != 0;

  // Ad-region size of every block.
  std::vector<std::size_t> ad_sizes{d};
  for (const Bytes& r : payload_regions) ad_sizes.push_back(d - r.size());
  std::size_t capacity = 0;
  for (std::size_t s : ad_sizes) capacity += s;
  while (capacity < ad.size()) {
    ad_sizes.push_back(d);
    capacity += d;
  }

  const bool ad_padded = ad.size() < capacity;
  Bytes ad_stream(ad.begin(), ad.end());
  if (ad_padded) {
    ad_stream.push_back(kAdTerminator);
    ad_stream.resize(capacity, 0);
  }

  EncodedStream out;
  std::size_t ad_pos = 0;
  for (std::size_t i = 0; i < ad_sizes.size(); ++i) {
    Body body;
    body.block.assign(ad_stream.begin() + ad_pos, ad_stream.begin() + ad_pos + ad_sizes[i]);
    ad_pos += ad_sizes[i];
    if (i >= 1 && i <= payload_regions.size()) {
      const Bytes& r = payload_regions[i - 1];
      body.block.insert(body.block.end(), r.begin(), r.end());
    }
    out.blocks.push_back(std::move(body));
  }

  const std::size_t n = out.blocks.size();
  if (payload.empty()) {
    out.blocks[0].tweak = Tweak::kOne;
  } else {
    const std::size_t j = payload_regions.size() + 1;
    if (j < n) out.blocks[j - 1].tweak = Tweak::kOne;
    if (msg_padded) out.blocks[n - 1].tweak = Tweak::kOne;
  }
  out.offset = ad_padded ? OffsetSelector::kOmega1 : OffsetSelector::kOmega0;
  return out;
}

std::pair<Bytes, Bytes> decode(const BackendProfile& profile,
                               const EncodedStream& stream) {
  const std::size_t c = profile.chain_size();
  const std::size_t d = profile.block_size();
  const std::size_t mav = profile.mav();
  const auto& blocks = stream.blocks;
  const std::size_t n = blocks.size();

  if (n == 0) throw DecodeError();
  for (const Body& b : blocks) {
    if (b.block.size() != d) throw DecodeError();
  }
  auto tweaked = [&](std::size_t i) { return blocks[i - 1].tweak == Tweak::kOne; };

  Bytes ad_stream;
  Bytes payload;
  auto append = [](Bytes& dst, const Bytes& src, std::size_t from, std::size_t to) {
    dst.insert(dst.end(), src.begin() + from, src.begin() + to);
  };

  if (tweaked(1)) {
    for (std::size_t i = 2; i <= n; ++i) {
      if (tweaked(i)) throw DecodeError();
    }
    for (const Body& b : blocks) append(ad_stream, b.block, 0, d);
  } else {
    if (n < 2) throw DecodeError();
    std::size_t j = n;
    std::size_t switches = 0;
    for (std::size_t i = 2; i < n; ++i) {
      if (tweaked(i)) {
        j = i;
        ++switches;
      }
    }
    if (switches > 1) throw DecodeError();

    const bool msg_padded = tweaked(n);
    std::size_t r = c;
    std::size_t s = c;
    if (msg_padded) {
      const Bytes& last = blocks[j - 1].block;
      const std::uint8_t v = last[d - 1];
      r = v % c;
      if (r == 0) throw DecodeError();
      s = (r / mav + 1) * mav;
      for (std::size_t k = d - s + r; k + 1 < d; ++k) {
        if (last[k] != 0) throw DecodeError();
      }
      if (v != static_cast<std::uint8_t>(((j - 2) * c + r) & 0xff)) throw DecodeError();
    }

    append(ad_stream, blocks[0].block, 0, d);
    for (std::size_t i = 2; i <= n; ++i) {
      const Bytes& b = blocks[i - 1].block;
      if (i < j) {
        append(ad_stream, b, 0, d - c);
        append(payload, b, d - c, d);
      } else if (i == j) {
        append(ad_stream, b, 0, d - s);
        append(payload, b, d - s, d - s + r);
      } else {
        append(ad_stream, b, 0, d);
      }
    }
  }

  if (stream.offset == OffsetSelector::kOmega1) {
    while (!ad_stream.empty() && ad_stream.back() == 0) ad_stream.pop_back();
    if (ad_stream.empty() || ad_stream.back() != kAdTerminator) throw DecodeError();
    ad_stream.pop_back();
  }

  // Anything that survives the structural checks but is not canonical (e.g. a
  // trailing all-padding block) fails here.
  if (encode(profile, ad_stream, payload) != stream) throw DecodeError();
  return {std::move(ad_stream), std::move(payload)};
}

Bytes serialize_stream(const EncodedStream& stream) {
  Bytes out;
  for (const Body& b : stream.blocks) {
    out.push_back(static_cast<std::uint8_t>(b.tweak));
    out.insert(out.end(), b.block.begin(), b.block.end());
  }
  out.push_back(0xff);
  out.push_back(static_cast<std::uint8_t>(stream.offset));
  return out;
}

EncodedStream parse_stream(const BackendProfile& profile, ByteView bytes) {
  const std::size_t d = profile.block_size();
  EncodedStream stream;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const std::uint8_t tag = bytes[pos];
    if (tag == 0xff) {
      if (pos + 2 != bytes.size() || bytes[pos + 1] > 1) throw DecodeError();
      stream.offset = static_cast<OffsetSelector>(bytes[pos + 1]);
      return stream;
    }
    if (tag > 1 || pos + 1 + d > bytes.size()) throw DecodeError();
    Body body;
    body.tweak = static_cast<Tweak>(tag);
    body.block.assign(bytes.begin() + pos + 1, bytes.begin() + pos + 1 + d);
    stream.blocks.push_back(std::move(body));
    pos += 1 + d;
  }
  throw DecodeError();
}

}  // namespace ets

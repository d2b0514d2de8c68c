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

#ifndef ETS_BYTES_HPP_
#define ETS_BYTES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ets {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
using MutableByteView = std::span<std::uint8_t>;

// Raised for precondition violations: wrong lengths, unknown backends,
// out-of-range keys or tag lengths.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by decode() for streams outside the image of encode().
class DecodeError : public std::runtime_error {
 public:
  DecodeError() : std::runtime_error("stream is not a valid encoding") {}
};

// The single failure signal of dec(). Carries no detail on purpose.
class AuthenticationError : public std::runtime_error {
 public:
  AuthenticationError() : std::runtime_error("authentication failed") {}
};

std::string to_hex(ByteView bytes);

// Accepts upper or lower case; throws ParameterError on odd length or bad
// digits.
Bytes from_hex(std::string_view hex);

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

// Compares in time dependent only on the lengths.
bool constant_time_equal(ByteView a, ByteView b);

// Overwrites with zeros in a way the optimiser may not elide.
void secure_wipe(MutableByteView bytes);

// dst ^= src over min(|dst|, |src|) bytes.
inline void xor_into(MutableByteView dst, ByteView src) {
  const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

}  // namespace ets

#endif  // ETS_BYTES_HPP_

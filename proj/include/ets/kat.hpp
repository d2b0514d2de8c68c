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

// Minimal full-hash framing around the compression functions, used only to
// check them against published digests.

#ifndef ETS_KAT_HPP_
#define ETS_KAT_HPP_

#include "ets/backend.hpp"
#include "ets/bytes.hpp"

namespace ets::kat {

// Merkle-Damgard strengthening over sha256_compress / sha512_compress.
Bytes sha256(ByteView message);
Bytes sha512(ByteView message);
// Unkeyed BLAKE2b-512 over the full RFC 7693 F.
Bytes blake2b512(ByteView message);

}  // namespace ets::kat

#endif  // ETS_KAT_HPP_

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

#ifndef ETS_TOOL_BENCH_HPP_
#define ETS_TOOL_BENCH_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace ets::tool {

struct BenchRow {
  std::string backend;
  std::size_t message_bytes;
  double micros_per_op;  // median over iterations
};

inline const std::vector<std::size_t> kDefaultBenchSizes = {
    64, 256, 1024, 4096, 65536, 1048576};

// Times enc() with `ad_bytes` of associated data on SHA-256, SHA-512 and
// BLAKE2b.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                std::size_t iterations,
                                std::size_t ad_bytes = 16);

// "backend,message_bytes,us_per_op" followed by one line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

// Human-readable note on whether BLAKE2b is fastest at every size and
// SHA-512 beats SHA-256 beyond one-block messages.
std::string bench_ordering_report(const std::vector<BenchRow>& rows);

}  // namespace ets::tool

#endif  // ETS_TOOL_BENCH_HPP_

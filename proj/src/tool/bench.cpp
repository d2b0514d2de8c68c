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

#include "ets/tool/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "ets/backend.hpp"
#include "ets/engine.hpp"

namespace ets::tool {

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                std::size_t iterations, std::size_t ad_bytes) {
  using Clock = std::chrono::steady_clock;
  const BackendProfile* profiles[] = {&BackendProfile::sha256(),
                                      &BackendProfile::sha512(),
                                      &BackendProfile::blake2b()};
  iterations = std::max<std::size_t>(1, iterations);
  std::vector<BenchRow> rows;
  const Bytes ad(ad_bytes, 0x3c);
  const Bytes key(32, 0x6b);

  for (const BackendProfile* p : profiles) {
    const EtsContext ctx(*p, key);
    for (std::size_t size : sizes) {
      const Bytes message(size, 0xa7);
      // Small messages are timed in batches so each sample spans ~64 KiB.
      const std::size_t batch = std::max<std::size_t>(1, 65536 / std::max<std::size_t>(1, size));
      std::vector<double> samples;
      samples.reserve(iterations);
      std::size_t sink = 0;
      for (std::size_t it = 0; it < iterations; ++it) {
        const auto start = Clock::now();
        for (std::size_t b = 0; b < batch; ++b) sink += enc(ctx, ad, message).tag[0];
        const std::chrono::duration<double, std::micro> dt = Clock::now() - start;
        samples.push_back(dt.count() / static_cast<double>(batch));
      }
      std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
      rows.push_back({std::string(p->name()), size, samples[samples.size() / 2]});
      static volatile std::size_t keep = 0;
      keep = keep + sink;
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "backend,message_bytes,us_per_op\n";
  for (const BenchRow& r : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.micros_per_op);
    os << r.backend << "," << r.message_bytes << "," << buf << "\n";
  }
  return os.str();
}

std::string bench_ordering_report(const std::vector<BenchRow>& rows) {
  std::map<std::size_t, std::map<std::string, double>> by_size;
  for (const BenchRow& r : rows) by_size[r.message_bytes][r.backend] = r.micros_per_op;

  bool blake_fastest = true;
  bool sha512_beats_sha256 = true;
  std::ostringstream os;
  for (const auto& [size, t] : by_size) {
    if (!t.count("sha256") || !t.count("sha512") || !t.count("blake2b")) continue;
    if (t.at("blake2b") > t.at("sha256") || t.at("blake2b") > t.at("sha512")) {
      blake_fastest = false;
      os << "  blake2b not fastest at " << size << " B\n";
    }
    // One SHA-256 call already covers a message of at most c = 32 bytes.
    if (size > 32 && t.at("sha512") > t.at("sha256")) {
      sha512_beats_sha256 = false;
      os << "  sha512 slower than sha256 at " << size << " B\n";
    }
  }
  std::ostringstream head;
  head << "blake2b fastest at all sizes: " << (blake_fastest ? "yes" : "no") << "\n"
       << "sha512 faster than sha256 beyond one-block messages: "
       << (sha512_beats_sha256 ? "yes" : "no") << "\n";
  return head.str() + os.str();
}

}  // namespace ets::tool

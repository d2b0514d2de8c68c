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

// ets: encrypt-to-self command line tool.
//
// Exit codes: 0 ok, 1 internal or I/O error, 2 usage error, 3 authentication
// failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ets/backend.hpp"
#include "ets/bytes.hpp"
#include "ets/engine.hpp"
#include "ets/tool/bench.hpp"
#include "ets/tool/container.hpp"
#include "ets/tool/selftest.hpp"
#include "ets/tool/vectors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAuth = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ets::Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  ets::Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path);
  return data;
}

void write_file(const std::string& path, ets::ByteView data) {
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (out) {
      out.write(reinterpret_cast<const char*>(data.data()),
                static_cast<std::streamsize>(data.size()));
      out.flush();
      if (out) return;
    }
  }
  std::error_code ec;
  std::filesystem::remove(path, ec);
  throw IoError("cannot write " + path);
}

// Hex flag or raw-bytes file; at most one of the two.
struct BytesSource {
  std::string hex;
  std::string file;

  std::optional<ets::Bytes> load(const char* what) const {
    if (!hex.empty() && !file.empty()) {
      throw ets::ParameterError(std::string("give either --") + what + "-hex or --" + what +
                                "-file, not both");
    }
    if (!hex.empty()) return ets::from_hex(hex);
    if (!file.empty()) return read_file(file);
    return std::nullopt;
  }
};

void add_source(CLI::App* cmd, BytesSource& src, const std::string& what,
                const std::string& desc) {
  cmd->add_option("--" + what + "-hex", src.hex, desc + " as hex");
  cmd->add_option("--" + what + "-file", src.file, desc + " from a file (raw bytes)");
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(item, &pos);
    if (pos != item.size()) throw ets::ParameterError("bad size '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw ets::ParameterError("--sizes is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encrypt-to-self: one-pass authenticated encryption with binding tags"};
  app.require_subcommand(1);

  // encrypt
  std::string backend = "blake2b";
  BytesSource key_src, ad_src;
  std::optional<std::size_t> taglen;
  std::string in_path, out_path;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file into an ETS1 container");
  encrypt->add_option("--backend", backend, "Compression backend")
      ->check(CLI::IsMember({"sha256", "sha512", "blake2b"}));
  add_source(encrypt, key_src, "key", "Key");
  add_source(encrypt, ad_src, "ad", "Associated data");
  encrypt->add_option("--taglen", taglen, "Binding tag length in bytes");
  encrypt->add_option("--in", in_path, "Plaintext input")->required();
  encrypt->add_option("--out", out_path, "Container output")->required();

  // decrypt
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt an ETS1 container");
  add_source(decrypt, key_src, "key", "Key");
  add_source(decrypt, ad_src, "ad", "Associated data");
  decrypt->add_option("--in", in_path, "Container input")->required();
  decrypt->add_option("--out", out_path, "Plaintext output")->required();

  // bench
  std::string sizes = "64,256,1024,4096,65536,1048576";
  std::size_t iters = 15;
  std::size_t ad_bytes = 16;
  auto* bench = app.add_subcommand("bench", "Time enc() per backend and message size (CSV)");
  bench->add_option("--sizes", sizes, "Comma-separated message sizes in bytes");
  bench->add_option("--iters", iters, "Timing samples per cell (median reported)");
  bench->add_option("--ad-bytes", ad_bytes, "Associated data length");

  // vectors
  std::vector<std::string> profiles;
  std::uint64_t seed = ets::tool::kDefaultVectorSeed;
  std::string check_path;
  std::string vectors_out;
  auto* vectors = app.add_subcommand("vectors", "Emit or check deterministic test vectors");
  vectors->add_option("--profile", profiles, "Profiles to cover (default: all)")
      ->check(CLI::IsMember({"toy", "sha256", "sha512", "blake2b"}));
  vectors->add_option("--seed", seed, "Content seed");
  vectors->add_option("--out", vectors_out, "Output file (default: stdout)");
  vectors->add_option("--check", check_path, "Verify an existing vector file instead");

  // selftest
  bool saboteur = false;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in self-tests");
  selftest->add_flag("--inject-saboteur", saboteur,
                     "Negative control: run against a scheme without tag checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encrypt) {
      const auto profile = ets::BackendProfile::from_name(backend);
      const auto key = key_src.load("key");
      if (!key) throw ets::ParameterError("a key is required (--key-hex or --key-file)");
      const ets::Bytes ad = ad_src.load("ad").value_or(ets::Bytes{});
      const ets::EtsContext ctx(*profile, *key, taglen);
      const ets::Bytes plaintext = read_file(in_path);
      ets::EncryptionResult r = ets::enc(ctx, ad, plaintext);
      const ets::Bytes container = ets::tool::serialize_container(
          {profile->id(), r.tag, std::move(r.ciphertext)});
      write_file(out_path, container);
      std::cout << ets::to_hex(r.tag) << "\n";
      return kExitOk;
    }

    if (*decrypt) {
      const auto key = key_src.load("key");
      if (!key) throw ets::ParameterError("a key is required (--key-hex or --key-file)");
      const ets::Bytes ad = ad_src.load("ad").value_or(ets::Bytes{});
      const ets::tool::Container c = ets::tool::parse_container(read_file(in_path));
      const ets::EtsContext ctx(ets::tool::container_profile(c.backend), *key, c.tag.size());
      ets::Bytes plaintext;
      try {
        plaintext = ets::dec(ctx, c.tag, ad, c.ciphertext);
      } catch (const ets::AuthenticationError& e) {
        std::cerr << "ets: " << e.what() << "\n";
        return kExitAuth;
      }
      write_file(out_path, plaintext);
      ets::secure_wipe(plaintext);
      return kExitOk;
    }

    if (*bench) {
      const auto rows = ets::tool::run_bench(parse_sizes(sizes), iters, ad_bytes);
      std::cout << ets::tool::bench_csv(rows);
      std::cerr << ets::tool::bench_ordering_report(rows);
      return kExitOk;
    }

    if (*vectors) {
      if (!check_path.empty()) {
        const ets::Bytes raw = read_file(check_path);
        const auto records =
            ets::tool::parse_vectors(std::string(raw.begin(), raw.end()));
        const std::size_t n = ets::tool::verify_vectors(records);
        std::cout << "verified " << n << " vectors\n";
        return kExitOk;
      }
      if (profiles.empty()) profiles = {"toy", "sha256", "sha512", "blake2b"};
      std::vector<ets::BackendProfile> selected;
      for (const auto& name : profiles) selected.push_back(*ets::BackendProfile::from_name(name));
      const std::string text =
          ets::tool::format_vectors(ets::tool::generate_vectors(selected, seed), seed);
      if (vectors_out.empty()) {
        std::cout << text;
      } else {
        write_file(vectors_out, ets::as_bytes(text));
      }
      return kExitOk;
    }

    if (*selftest) {
      const auto report = ets::tool::run_selftest({saboteur});
      for (const auto& check : report.checks) {
        std::cout << (check.passed ? "[ ok ] " : "[FAIL] ") << check.name;
        if (!check.passed) std::cout << ": " << check.detail;
        std::cout << "\n";
      }
      if (const auto* failed = report.first_failure()) {
        std::cerr << "ets: selftest failed at '" << failed->name << "'\n";
        return kExitIo;
      }
      return kExitOk;
    }
  } catch (const ets::ParameterError& e) {
    std::cerr << "ets: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "ets: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "ets: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

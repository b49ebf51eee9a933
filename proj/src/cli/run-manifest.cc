// cli/run-manifest.cc

// Copyright 2026  The para-rank Authors

// See ../../COPYING for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "cli/run-manifest.h"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <memory>

#include "base/pararank-error.h"

namespace pararank {

std::string Sha256File(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path + " for hashing");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
    throw Error("sha256 initialisation failed");
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    std::streamsize got = in.gcount();
    if (got > 0 && EVP_DigestUpdate(ctx.get(), buf, got) != 1)
      throw Error("sha256 update failed on " + path);
  }
  if (in.bad()) throw Error("read error while hashing " + path);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
    throw Error("sha256 finalisation failed");
  static const char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 15];
  }
  return hex;
}

void RunManifest::AddFlag(const std::string &name, const std::string &value) {
  flags_.emplace_back(name, value);
}

void RunManifest::AddInput(const std::string &path) {
  inputs_.emplace_back(path, Sha256File(path));
}

void RunManifest::AddOutput(const std::string &path) {
  outputs_.push_back(path);
}

void RunManifest::AddSeed(const std::string &name, uint64_t value) {
  seeds_.emplace_back(name, value);
}

namespace {

std::string UtcTimestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

nlohmann::ordered_json RunManifest::ToJson() const {
  nlohmann::ordered_json j;
  j["artifact_version"] = kArtifactVersion;
  j["tool_version"] = PARARANK_VERSION;
  j["command"] = command_;
  j["flags"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : flags_) j["flags"][k] = v;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto &[path, digest] : inputs_)
    j["inputs"].push_back({{"path", path}, {"sha256", digest}});
  j["outputs"] = outputs_;
  j["seeds"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : seeds_) j["seeds"][k] = v;
  if (!extra_.empty()) j["results"] = extra_;
  j["timestamp"] = UtcTimestamp();
  return j;
}

void RunManifest::Write(const std::string &path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write manifest " + path);
  out << ToJson().dump(2) << "\n";
  if (!out) throw Error("write failed: " + path);
}

std::string ManifestPathFor(const std::string &output_file) {
  return output_file + ".manifest.json";
}

}  // namespace pararank

// cli/run-manifest.h

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

#ifndef PARARANK_CLI_RUN_MANIFEST_H_
#define PARARANK_CLI_RUN_MANIFEST_H_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pararank {

// Lowercase hex SHA-256 of a file's bytes.
std::string Sha256File(const std::string &path);

// Provenance record written next to every file-emitting command's output.
class RunManifest {
 public:
  static constexpr int kArtifactVersion = 1;

  explicit RunManifest(std::string command) : command_(std::move(command)) {}

  void AddFlag(const std::string &name, const std::string &value);
  // Digests the file now, so call before anything could overwrite it.
  void AddInput(const std::string &path);
  void AddOutput(const std::string &path);
  void AddSeed(const std::string &name, uint64_t value);
  // Command-specific values, e.g. the mixing gains.
  nlohmann::ordered_json &extra() { return extra_; }

  nlohmann::ordered_json ToJson() const;
  void Write(const std::string &path) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> flags_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::string> outputs_;
  std::vector<std::pair<std::string, uint64_t>> seeds_;
  nlohmann::ordered_json extra_ = nlohmann::ordered_json::object();
};

// "<file>.manifest.json" for single-file outputs.
std::string ManifestPathFor(const std::string &output_file);

}  // namespace pararank

#endif  // PARARANK_CLI_RUN_MANIFEST_H_

// tests/make-synthetic-pin.cc

// Copyright 2026  The para-rank Authors

// See ../COPYING for clarification regarding multiple authors
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

// Writes a synthetic PiN-shaped corpus for demos and manual runs.

#include <iostream>

#include "CLI11.hpp"
#include "synthetic-pin.h"

int main(int argc, char *argv[]) {
  CLI::App app{"Write a synthetic PiN-shaped corpus.", "make-synthetic-pin"};
  std::string dir;
  pararank::SyntheticPinOptions opts;
  app.add_option("--out", dir, "output directory")->required();
  app.add_option("--seed", opts.seed, "generator seed");
  app.add_flag("--audio", opts.with_audio, "also write clean/ and noisy/ wavs");
  CLI11_PARSE(app, argc, argv);
  try {
    pararank::WriteSyntheticPin(dir, opts);
  } catch (const std::exception &e) {
    std::cerr << "make-synthetic-pin: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

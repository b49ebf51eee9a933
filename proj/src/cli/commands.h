// cli/commands.h

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

#ifndef PARARANK_CLI_COMMANDS_H_
#define PARARANK_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pararank {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation or runtime error
inline constexpr int kExitUsage = 2;    // bad command line

// Runs one para-rank command. `args` excludes the program name. Results go
// to `out`, diagnostics and usage text to `err`.
int RunParaRank(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err);

}  // namespace pararank

#endif  // PARARANK_CLI_COMMANDS_H_

// base/text-utils.h

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

#ifndef PARARANK_BASE_TEXT_UTILS_H_
#define PARARANK_BASE_TEXT_UTILS_H_

#include <string>
#include <string_view>
#include <vector>

namespace pararank {

std::vector<std::string> SplitWhitespace(std::string_view text);

// Splits on every occurrence of `delim`; keeps empty fields.
std::vector<std::string> SplitString(std::string_view text, char delim);

std::string Trim(std::string_view text);

// ASCII lowercase; bytes >= 0x80 are passed through untouched.
std::string ToLower(std::string_view text);

std::string JoinStrings(const std::vector<std::string> &parts,
                        std::string_view sep);

// Strict parsers: the whole (trimmed) field must be consumed. `what` names
// the field in the error message.
double ParseDouble(std::string_view text, std::string_view what);
long long ParseInt(std::string_view text, std::string_view what);

// Shortest representation that round-trips through ParseDouble.
std::string FormatDouble(double value);

}  // namespace pararank

#endif  // PARARANK_BASE_TEXT_UTILS_H_

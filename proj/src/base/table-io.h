// base/table-io.h

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

#ifndef PARARANK_BASE_TABLE_IO_H_
#define PARARANK_BASE_TABLE_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pararank {

// A header-plus-rows text table (TSV or CSV). CSV fields may be quoted with
// '"' and use "" for an embedded quote; TSV fields are taken verbatim.
class Table {
 public:
  struct Row {
    std::vector<std::string> fields;
    int line = 0;  // 1-based line number in the source file
  };

  static Table Read(const std::string &path, char delim);
  static Table Parse(std::istream &is, char delim, const std::string &source);

  const std::vector<std::string> &header() const { return header_; }
  const std::vector<Row> &rows() const { return rows_; }
  const std::string &source() const { return source_; }

  // Index of a named column; throws naming the column and file if absent.
  size_t Column(std::string_view name) const;
  bool HasColumn(std::string_view name) const;

 private:
  std::string source_;
  std::vector<std::string> header_;
  std::vector<Row> rows_;
};

// Formats one output row. CSV fields containing the delimiter, quotes or
// newlines are quoted.
std::string FormatRow(const std::vector<std::string> &fields, char delim);

}  // namespace pararank

#endif  // PARARANK_BASE_TABLE_IO_H_

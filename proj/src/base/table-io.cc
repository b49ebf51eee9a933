// base/table-io.cc

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

#include "base/table-io.h"

#include <fstream>
#include <istream>

#include "base/pararank-error.h"

namespace pararank {

namespace {

std::vector<std::string> SplitCsvLine(const std::string &line, char delim,
                                      const std::string &source, int lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == delim) {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted)
    throw Error(source + ":" + std::to_string(lineno) + ": unterminated quote");
  fields.push_back(std::move(cur));
  return fields;
}

std::vector<std::string> SplitTsvLine(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  for (;;) {
    size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Table Table::Read(const std::string &path, char delim) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  return Parse(is, delim, path);
}

Table Table::Parse(std::istream &is, char delim, const std::string &source) {
  Table table;
  table.source_ = source;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line.empty()) continue;
    std::vector<std::string> fields =
        delim == '\t' ? SplitTsvLine(line)
                      : SplitCsvLine(line, delim, source, lineno);
    if (!have_header) {
      table.header_ = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header_.size())
      throw Error(source + ":" + std::to_string(lineno) + ": expected " +
                  std::to_string(table.header_.size()) + " fields, found " +
                  std::to_string(fields.size()));
    table.rows_.push_back(Row{std::move(fields), lineno});
  }
  if (!have_header) throw Error(source + ": empty table (no header)");
  return table;
}

size_t Table::Column(std::string_view name) const {
  for (size_t i = 0; i < header_.size(); ++i)
    if (header_[i] == name) return i;
  throw Error(source_ + ": missing column '" + std::string(name) + "'");
}

bool Table::HasColumn(std::string_view name) const {
  for (const auto &h : header_)
    if (h == name) return true;
  return false;
}

std::string FormatRow(const std::vector<std::string> &fields, char delim) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += delim;
    const std::string &f = fields[i];
    bool needs_quote = delim != '\t' &&
                       f.find_first_of(std::string(1, delim) + "\"\n\r") !=
                           std::string::npos;
    if (!needs_quote) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out;
}

}  // namespace pararank

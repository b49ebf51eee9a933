// lm/external-ppl.cc

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

#include "lm/external-ppl.h"

#include <cmath>
#include <fstream>
#include <unordered_set>

#include "base/pararank-error.h"
#include "base/table-io.h"
#include "base/text-utils.h"

namespace pararank {

namespace {

std::vector<PplRecord> FromTable(const Table &t) {
  size_t id_col = t.Column("utterance_id");
  size_t ppl_col = t.Column("ppl");
  std::vector<PplRecord> out;
  std::unordered_set<std::string> seen;
  for (size_t r = 0; r < t.rows().size(); ++r) {
    const Table::Row &row = t.rows()[r];
    std::string where = t.source() + ": row " + std::to_string(r + 1) +
                        " (line " + std::to_string(row.line) + ")";
    PplRecord rec;
    rec.utterance_id = Trim(row.fields[id_col]);
    if (rec.utterance_id.empty()) throw Error(where + ": empty utterance_id");
    try {
      rec.ppl = ParseDouble(row.fields[ppl_col], "ppl");
    } catch (const Error &e) {
      throw Error(where + ": " + e.what());
    }
    if (!(std::isfinite(rec.ppl) && rec.ppl > 0.0))
      throw Error(where + ": ppl must be positive, got " + row.fields[ppl_col]);
    if (!seen.insert(rec.utterance_id).second)
      throw Error(where + ": duplicate id " + rec.utterance_id);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<PplRecord> LoadExternalPpl(const std::string &path) {
  return FromTable(Table::Read(path, ','));
}

std::vector<PplRecord> ParseExternalPpl(std::istream &is,
                                        const std::string &source) {
  return FromTable(Table::Parse(is, ',', source));
}

}  // namespace pararank

//
// Copyright 2026 The anonhist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef ANONHIST_IO_H_
#define ANONHIST_IO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "anonhist/enumeration.h"
#include "anonhist/experiment.h"
#include "anonhist/lowerbound.h"
#include "anonhist/partition.h"

namespace anonhist {

// Text format: one part per line, decimal digits only, each line terminated
// by '\n', parts positive and nonincreasing. The empty string is the empty
// histogram. Anything else (signs, blanks, trailing junk, missing final
// newline, wrong order) is a PreconditionError.
IntegerPartition ParsePartitionText(const std::string& text);
std::string FormatPartitionText(const IntegerPartition& p);

// JSON format: an array of nonnegative integer counts in any order, e.g.
// [3, 0, 2, 3]. Zeros are dropped, the rest is sorted.
IntegerPartition ParsePartitionJson(const std::string& text);

// A whitespace-separated list of integers (possibly negative), as fed to the
// projection oracle.
std::vector<int64_t> ParseIntVector(const std::string& text);

// Bit vectors as big-endian hex: the first hex digit holds the highest
// numbered bits. When the bit count is not a multiple of 4 the top padding
// bits of the first digit must be zero. Bit 0 is the lowest bit of the last
// digit.
std::string BitsToHex(const BitVector& bits);
BitVector HexToBits(const std::string& hex, int64_t bit_count);

// Deterministic JSON serializations: fixed field order, no timing fields,
// counts as exact integers.
std::string PartitionToJson(const IntegerPartition& p);
std::string ReportToJson(const ExperimentReport& report,
                         const std::string& input_label);
std::string ReportsToJson(const std::vector<ExperimentReport>& reports,
                          const std::vector<std::string>& input_labels);
std::string PackingToJson(const PackingResult& packing);
std::string AuditToJson(const SensitivityAuditReport& report, int64_t n);

}  // namespace anonhist

#endif  // ANONHIST_IO_H_

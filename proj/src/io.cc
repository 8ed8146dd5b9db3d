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

#include "anonhist/io.h"

#include <cctype>
#include <limits>
#include <sstream>
#include <string>

#include "anonhist/errors.h"
#include "json.hpp"

namespace anonhist {
namespace {

using ordered_json = nlohmann::ordered_json;

int64_t ParseCountLine(const std::string& text, size_t begin, size_t end) {
  if (begin == end) {
    throw PreconditionError("partition text: empty line");
  }
  if (text[begin] == '0') {
    throw PreconditionError("partition text: counts must be positive with no leading zeros");
  }
  int64_t value = 0;
  for (size_t i = begin; i < end; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw PreconditionError("partition text: lines must be decimal digits only");
    }
    const int64_t digit = c - '0';
    if (value > (std::numeric_limits<int64_t>::max() - digit) / 10) {
      throw PreconditionError("partition text: count overflows int64");
    }
    value = value * 10 + digit;
  }
  return value;
}

int HexDigitValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw PreconditionError("bit string: not a hex digit");
}

ordered_json PartitionToJsonValue(const IntegerPartition& p) {
  ordered_json arr = ordered_json::array();
  for (int64_t part : p.parts()) arr.push_back(part);
  return arr;
}

ordered_json ReportToJsonValue(const ExperimentReport& report,
                               const std::string& input_label) {
  ordered_json j = ordered_json::object();
  j["mechanism_kind"] = report.mechanism_kind;
  j["n"] = report.n;
  j["epsilon"] = report.epsilon;
  j["trials"] = report.trials;
  j["mean_error"] = report.mean_error;
  j["std_error"] = report.std_error;
  j["max_error"] = report.max_error;
  j["seed"] = report.seed;
  j["input"] = input_label;
  return j;
}

}  // namespace

IntegerPartition ParsePartitionText(const std::string& text) {
  std::vector<int64_t> parts;
  size_t line_start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      parts.push_back(ParseCountLine(text, line_start, i));
      line_start = i + 1;
    }
  }
  if (line_start != text.size()) {
    throw PreconditionError("partition text: final line must end in a newline");
  }
  return IntegerPartition::FromParts(parts);
}

std::string FormatPartitionText(const IntegerPartition& p) {
  std::string out;
  for (int64_t part : p.parts()) {
    out += std::to_string(part);
    out += '\n';
  }
  return out;
}

IntegerPartition ParsePartitionJson(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw PreconditionError(std::string("partition JSON: ") + e.what());
  }
  if (!j.is_array()) {
    throw PreconditionError("partition JSON: expected an array of counts");
  }
  std::vector<int64_t> counts;
  for (const auto& item : j) {
    if (!item.is_number_integer() && !item.is_number_unsigned()) {
      throw PreconditionError("partition JSON: counts must be integers");
    }
    if (item.is_number_unsigned() &&
        item.get<uint64_t>() >
            static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) {
      throw PreconditionError("partition JSON: count overflows int64");
    }
    counts.push_back(item.get<int64_t>());
  }
  return IntegerPartition::FromCounts(counts);
}

std::vector<int64_t> ParseIntVector(const std::string& text) {
  std::vector<int64_t> values;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    size_t used = 0;
    int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw PreconditionError("integer vector: bad token '" + token + "'");
    }
    if (used != token.size()) {
      throw PreconditionError("integer vector: bad token '" + token + "'");
    }
    values.push_back(value);
  }
  return values;
}

std::string BitsToHex(const BitVector& bits) {
  const size_t digit_count = (bits.size() + 3) / 4;
  std::string hex(digit_count, '0');
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      throw PreconditionError("bit vector entries must be 0 or 1");
    }
    if (bits[i] == 0) continue;
    const size_t digit = digit_count - 1 - i / 4;
    const int nibble = HexDigitValue(hex[digit]) | (1 << (i % 4));
    hex[digit] = "0123456789abcdef"[nibble];
  }
  return hex;
}

BitVector HexToBits(const std::string& hex, int64_t bit_count) {
  if (bit_count < 0) {
    throw PreconditionError("bit string: negative bit count");
  }
  const size_t digit_count = (static_cast<size_t>(bit_count) + 3) / 4;
  if (hex.size() != digit_count) {
    std::ostringstream msg;
    msg << "bit string: expected " << digit_count << " hex digits for "
        << bit_count << " bits, got " << hex.size();
    throw PreconditionError(msg.str());
  }
  BitVector bits(static_cast<size_t>(bit_count), 0);
  for (size_t digit = 0; digit < digit_count; ++digit) {
    const int nibble = HexDigitValue(hex[digit]);
    for (int b = 0; b < 4; ++b) {
      if ((nibble & (1 << b)) == 0) continue;
      const size_t index = (digit_count - 1 - digit) * 4 + static_cast<size_t>(b);
      if (index >= static_cast<size_t>(bit_count)) {
        throw PreconditionError("bit string: padding bits must be zero");
      }
      bits[index] = 1;
    }
  }
  return bits;
}

std::string PartitionToJson(const IntegerPartition& p) {
  return PartitionToJsonValue(p).dump();
}

std::string ReportToJson(const ExperimentReport& report,
                         const std::string& input_label) {
  return ReportToJsonValue(report, input_label).dump(2);
}

std::string ReportsToJson(const std::vector<ExperimentReport>& reports,
                          const std::vector<std::string>& input_labels) {
  if (reports.size() != input_labels.size()) {
    throw PreconditionError("one label per report required");
  }
  ordered_json arr = ordered_json::array();
  for (size_t i = 0; i < reports.size(); ++i) {
    arr.push_back(ReportToJsonValue(reports[i], input_labels[i]));
  }
  return arr.dump(2);
}

std::string PackingToJson(const PackingResult& packing) {
  ordered_json j = ordered_json::object();
  ordered_json parts = ordered_json::array();
  for (const IntegerPartition& p : packing.partitions) {
    parts.push_back(PartitionToJsonValue(p));
  }
  j["partitions"] = parts;
  ordered_json cert = ordered_json::object();
  cert["min_pairwise"] = packing.min_pairwise;
  cert["max_pairwise"] = packing.max_pairwise;
  cert["count"] = static_cast<int64_t>(packing.partitions.size());
  cert["n"] = packing.spec.n;
  cert["delta"] = packing.spec.delta;
  cert["level_count"] = packing.spec.level_count;
  cert["ranks_per_level"] = packing.spec.ranks_per_level;
  cert["bit_length"] = packing.spec.bit_length;
  j["certification"] = cert;
  return j.dump(2);
}

std::string AuditToJson(const SensitivityAuditReport& report, int64_t n) {
  ordered_json j = ordered_json::object();
  j["n"] = n;
  j["pairs_checked"] = report.pairs_checked;
  j["max_image_distance"] = report.max_image_distance;
  return j.dump(2);
}

}  // namespace anonhist

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

#ifndef ANONHIST_ERRORS_H_
#define ANONHIST_ERRORS_H_

#include <stdexcept>
#include <string>

namespace anonhist {

// A caller broke a documented contract (bad argument, inconsistent config,
// malformed input file). Mapped to CLI exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive oracle or enumeration was asked to run beyond the size it is
// designed for. Mapped to CLI exit code 3.
class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructed object failed its own self-checks (packing distance bounds,
// encoding grid invariants). Mapped to CLI exit code 4.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace anonhist

#endif  // ANONHIST_ERRORS_H_

// Copyright 2026 The opk authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPK_REPORT_HPP
#define OPK_REPORT_HPP

#include <string>
#include <vector>

namespace opk {

struct LawFailure {
  std::string law;
  std::string detail;
};

/// One verified law: a stable id, a human-readable statement, the number of
/// instances checked and the failures (with reproduction payloads) if any.
struct LawResult {
  std::string id;
  std::string statement;
  long long trials = 0;
  std::vector<LawFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<LawResult> laws;
  bool passed() const {
    for (const auto& l : laws)
      if (!l.passed()) return false;
    return true;
  }
};

}  // namespace opk

#endif  // OPK_REPORT_HPP

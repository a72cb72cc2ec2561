// Copyright 2026 The bosonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bosonkit {

struct ValidationOptions {
  int dim_max = 4;  // largest mode/particle count used by the amplitude checks
  std::uint64_t seed = 20260101;
  bool fault_injection = false;  // negates the contour amplitudes
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

/// Desk-scale consistency suite: permanent algorithms against each other,
/// permanent/contour/oracle amplitudes, completeness of output
/// distributions, flat quadrature probability, exact moments against the
/// reference table and closed forms, Monte Carlo moments within 3 standard
/// errors.
ValidationReport run_validation(const ValidationOptions& options = {});

}  // namespace bosonkit

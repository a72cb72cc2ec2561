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

#include <cstddef>

#include "bosonkit/matrix.hpp"

namespace bosonkit {

inline constexpr std::size_t kMaxNaivePermanentDim = 11;
inline constexpr std::size_t kMaxPermanentDim = 30;

/// Sum over all n! permutations. Reference implementation; n <= 11.
Complex permanent_naive(const ComplexMatrix& a);

/// Ryser inclusion-exclusion formula with Gray-code ordered subset updates,
/// O(2^n n). The subset range is cut into fixed chunks whose partial sums
/// are added in chunk order, so the result is bit-identical for any
/// BOSONKIT_THREADS setting. n <= 30.
Complex permanent_ryser(const ComplexMatrix& a);

/// Glynn's formula over sign vectors delta in {+1,-1}^n with delta_0 = +1,
/// visited in Gray-code order. Same chunking and limits as Ryser.
Complex permanent_glynn(const ComplexMatrix& a);

}  // namespace bosonkit

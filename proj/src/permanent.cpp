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

#include "bosonkit/permanent.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bosonkit/error.hpp"
#include "bosonkit/parallel.hpp"

namespace bosonkit {
namespace {

void check_square(const ComplexMatrix& a, std::size_t limit) {
  if (!a.is_square()) {
    throw Error(ErrorCode::NonSquare, "permanent needs a square matrix, got " +
                                          std::to_string(a.rows()) + "x" +
                                          std::to_string(a.cols()));
  }
  if (a.rows() > limit) {
    throw Error(ErrorCode::DimensionTooLarge, "permanent dimension " + std::to_string(a.rows()) +
                                                  " exceeds limit " + std::to_string(limit));
  }
}

// Subset counters below 2^14 run in one chunk; above, the range is split
// into 2^(bits-14) fixed chunks.
constexpr unsigned kChunkBits = 14;

std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

template <class ChunkFn>
Complex chunked_sum(std::uint64_t total, ChunkFn&& chunk_sum) {
  const std::uint64_t chunk_size = std::uint64_t{1} << kChunkBits;
  const std::uint64_t chunks = total <= chunk_size ? 1 : total / chunk_size;
  const std::uint64_t per_chunk = total / chunks;
  std::vector<Complex> partial(chunks);
  parallel_for(static_cast<std::size_t>(chunks), [&](std::size_t c) {
    const std::uint64_t begin = c * per_chunk;
    const std::uint64_t end = (c + 1 == chunks) ? total : begin + per_chunk;
    partial[c] = chunk_sum(begin, end);
  });
  Complex sum = 0.0;
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace

Complex permanent_naive(const ComplexMatrix& a) {
  check_square(a, kMaxNaivePermanentDim);
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex sum = 0.0;
  do {
    Complex prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= a(i, perm[i]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Complex permanent_ryser(const ComplexMatrix& a) {
  check_square(a, kMaxPermanentDim);
  const std::size_t n = a.rows();
  const auto& m = a.eigen();
  // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, over
  // column subsets S. Subset k of the Gray sequence is gray(k).
  const std::uint64_t total = std::uint64_t{1} << n;
  const Complex sum = chunked_sum(total, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Complex> row_sums(n, Complex(0.0));
    std::uint64_t subset = gray(begin);
    for (std::size_t j = 0; j < n; ++j) {
      if ((subset >> j) & 1U) {
        for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(i, j);
      }
    }
    auto term = [&](std::uint64_t s) {
      Complex prod = 1.0;
      for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];
      return (std::popcount(s) & 1) ? -prod : prod;
    };
    Complex acc = begin == 0 ? Complex(0.0) : term(subset);
    for (std::uint64_t k = begin + 1; k < end; ++k) {
      const auto j = static_cast<std::size_t>(std::countr_zero(k));
      subset ^= std::uint64_t{1} << j;
      if ((subset >> j) & 1U) {
        for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(i, j);
      } else {
        for (std::size_t i = 0; i < n; ++i) row_sums[i] -= m(i, j);
      }
      acc += term(subset);
    }
    return acc;
  });
  return (n & 1U) ? -sum : sum;
}

Complex permanent_glynn(const ComplexMatrix& a) {
  check_square(a, kMaxPermanentDim);
  const std::size_t n = a.rows();
  const auto& m = a.eigen();
  // Bit r-1 of the Gray word set means delta_r = -1 for rows r = 1..n-1.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  const Complex sum = chunked_sum(total, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t signs = gray(begin);
    std::vector<Complex> col_sums(n);
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = m(0, j);
      for (std::size_t r = 1; r < n; ++r) {
        s += ((signs >> (r - 1)) & 1U) ? -m(r, j) : m(r, j);
      }
      col_sums[j] = s;
    }
    auto term = [&](std::uint64_t s) {
      Complex prod = 1.0;
      for (std::size_t j = 0; j < n; ++j) prod *= col_sums[j];
      return (std::popcount(s) & 1) ? -prod : prod;
    };
    Complex acc = term(signs);
    for (std::uint64_t k = begin + 1; k < end; ++k) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(k));
      signs ^= std::uint64_t{1} << bit;
      const std::size_t r = bit + 1;
      const double step = ((signs >> bit) & 1U) ? -2.0 : 2.0;
      for (std::size_t j = 0; j < n; ++j) col_sums[j] += step * m(r, j);
      acc += term(signs);
    }
    return acc;
  });
  return sum / std::ldexp(1.0, static_cast<int>(n - 1));
}

}  // namespace bosonkit

// Copyright 2026 The Authors.
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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rphase {

/// Subsets of a ground set {0, ..., n-1} with n <= kMaxGround.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 16;

/// Thrown for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr bool contains(Mask m, int i) { return (m >> i) & 1U; }

inline constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest(Mask m) { return std::countr_zero(m); }

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

/// Lexicographic order on subsets viewed as sorted element lists.
inline bool subset_lex_less(Mask a, Mask b) {
  while (a && b) {
    int x = lowest(a), y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Removes the positions in `drop` and packs the remaining bits downwards.
inline Mask compress(Mask v, Mask drop, int n) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; i < n; ++i) {
    if (contains(drop, i)) continue;
    if (contains(v, i)) out |= bit(j);
    ++j;
  }
  return out;
}

/// Inverse of compress on the kept positions; dropped positions are zero.
inline Mask expand(Mask v, Mask drop, int n) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; i < n; ++i) {
    if (contains(drop, i)) continue;
    if (contains(v, j)) out |= bit(i);
    ++j;
  }
  return out;
}

inline void check_ground_size(int n) {
  if (n < 0 || n > kMaxGround)
    throw Error("ground set size " + std::to_string(n) + " outside [0, " +
                std::to_string(kMaxGround) + "]");
}

}  // namespace rphase

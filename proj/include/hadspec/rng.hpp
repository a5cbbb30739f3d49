// Copyright 2026 The hadspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HADSPEC_RNG_HPP
#define HADSPEC_RNG_HPP

#include <cstdint>
#include <string_view>

namespace hadspec {

/// Deterministic random stream (xoshiro256** seeded via splitmix64).
/// Distributions are hand rolled so identical keys give identical draws on
/// every toolchain; std:: distributions are not byte-stable across stdlibs.
class Stream {
 public:
  explicit Stream(std::uint64_t key);

  std::uint64_t next_u64();
  double uniform01();  // in [0, 1)
  double uniform(double lo, double hi);
  double loguniform(double lo, double hi);  // requires 0 < lo < hi
  std::uint64_t below(std::uint64_t n);     // in [0, n), unbiased
  int int_in(int lo, int hi);               // inclusive bounds
  bool bernoulli(double p);

 private:
  std::uint64_t s_[4];
};

/// FNV-1a 64-bit over a byte string.
std::uint64_t fnv1a64(std::string_view bytes);

/// Stable per-trial stream key from campaign coordinates.  Results are
/// independent of worker scheduling because every trial owns its key.
std::uint64_t derive_key(std::uint64_t seed, std::string_view law,
                         std::string_view functional, std::uint64_t trial);

}  // namespace hadspec

#endif  // HADSPEC_RNG_HPP

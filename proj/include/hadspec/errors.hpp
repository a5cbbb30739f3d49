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

#ifndef HADSPEC_ERRORS_HPP
#define HADSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hadspec {

enum class errc {
  non_square,
  negative_entry,
  non_finite_entry,
  dimension_mismatch,
  length_mismatch,
  negative_exponent,
  exponent_domain,
  weights_not_convex,
  weights_too_small,
  empty_list,
  odd_m,
  missing_permutation,
  unknown_law,
  input_shape_mismatch,
  unsatisfiable,
  depth_overflow,
  parse_error,
  io_error,
  bad_argument,
};

const char* errc_name(errc c);

/// Single exception type for all domain errors; code() identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hadspec

#endif  // HADSPEC_ERRORS_HPP

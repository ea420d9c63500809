/*
   Copyright 2026 The qhl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QHL_ERROR_HPP
#define QHL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qhl {

enum class errc {
  invalid_parameters,
  dimension_mismatch,
  zero_division,
  not_divisible,
  not_found,
  window_too_small,
  size_guard,
  empty_matrix,
  non_invariant_symbol,
  non_analytic_symbol,
  outside_domain,
  zero_of_ell,
  malformed_input,
  internal,
};

inline const char* errc_name(errc e) {
  switch (e) {
    case errc::invalid_parameters: return "invalid-parameters";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::zero_division: return "zero-division";
    case errc::not_divisible: return "not-divisible";
    case errc::not_found: return "not-found";
    case errc::window_too_small: return "window-too-small";
    case errc::size_guard: return "size-guard";
    case errc::empty_matrix: return "empty-matrix";
    case errc::non_invariant_symbol: return "non-invariant-symbol";
    case errc::non_analytic_symbol: return "non-analytic-symbol";
    case errc::outside_domain: return "outside-domain";
    case errc::zero_of_ell: return "zero-of-ell";
    case errc::malformed_input: return "malformed-input";
    case errc::internal: return "internal";
  }
  return "unknown";
}

/// Library error carrying a coarse code plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qhl

#endif

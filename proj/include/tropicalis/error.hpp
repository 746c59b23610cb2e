// Copyright 2026 The Tropicalis Authors
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

#ifndef TROPICALIS_ERROR_HPP_
#define TROPICALIS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropicalis {

enum class ErrorKind {
  Domain,         // inadmissible value, bad parameter
  Shape,          // dimension / descriptor mismatch
  NotInvertible,  // inverse requested for zero or top
  NoBound,        // sup/inf of empty set without the required bound
  Divergence,     // unbounded iteration (improving cycle)
  Axiom,          // table fails a required axiom
  Size,           // structure exceeds the supported size
  Parse,          // malformed input file
  Inconsistent,   // contradictory prescription (Hahn-Banach)
  ZeroFunctional, // operation undefined for the zero functional
  NotSeparable,   // separation of equal elements
  Unsupported,    // carrier or feature outside the built-in set
};

inline std::string_view error_kind_token(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::NoBound: return "no-bound";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::Axiom: return "axiom-violation";
    case ErrorKind::Size: return "size";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::ZeroFunctional: return "zero-functional";
    case ErrorKind::NotSeparable: return "not-separable";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "unknown";
}

class TropError : public std::runtime_error {
 public:
  TropError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Divergence carries the witness cycle (node indices, in walk order).
class DivergenceError : public TropError {
 public:
  DivergenceError(const std::string& msg, std::vector<int> cycle)
      : TropError(ErrorKind::Divergence, msg), cycle_(std::move(cycle)) {}

  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<int> cycle_;
};

}  // namespace tropicalis

#endif  // TROPICALIS_ERROR_HPP_

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qck {

using cplx = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

// Index of a matrix unit e^{(a)}_{ij} inside a multi-matrix algebra:
// block `a`, row `i`, column `j` (all 0-based internally).
struct BlockIndex {
  int a = 0;
  int i = 0;
  int j = 0;
  auto operator<=>(const BlockIndex&) const = default;
};

// Thrown when input data fails a structural validation.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on malformed files / JSON.
class IOError : public std::runtime_error {
 public:
  explicit IOError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qck

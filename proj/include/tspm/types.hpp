// Copyright 2026 The tspm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSPM_TYPES_HPP
#define TSPM_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tspm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Default tolerances used across the library. Operations that take a
// tolerance parameter default to these values.
namespace tol {
inline constexpr double hermiticity = 1e-10;  // max |A - A^dag| entry
inline constexpr double psd = 1e-10;          // eigenvalue floor for PSD checks
inline constexpr double pinv_rank = 1e-12;    // relative singular value cutoff
inline constexpr double ket_norm = 1e-12;
inline constexpr double povm = 1e-10;         // POVM completeness deviation
}  // namespace tol

// Thrown when a mathematical precondition of an operation fails (e.g. a
// filtering protocol applied to a completely co-positive map). The CLI maps
// this to its own exit code, distinct from malformed input.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tspm

#endif

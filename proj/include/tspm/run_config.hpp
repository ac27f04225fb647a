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

#ifndef TSPM_RUN_CONFIG_HPP
#define TSPM_RUN_CONFIG_HPP

#include <cstdint>
#include <stdexcept>

namespace tspm {

enum class OutputFormat { Json, Csv };

// Knobs shared by every optimization-backed operation. Seeds are part of all
// emitted reports so any number can be regenerated exactly.
struct RunConfig {
  std::uint64_t seed = 42;
  int restarts = 64;
  int max_iter = 500;
  double tol = 1e-10;
  int size_cap = 4096;  // largest allowed matrix side in tensor powers
  OutputFormat output_format = OutputFormat::Json;

  void validate() const {
    if (restarts < 1 || max_iter < 1 || size_cap < 1) {
      throw std::invalid_argument("restarts, max_iter and size_cap must be positive");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  }
};

}  // namespace tspm

#endif

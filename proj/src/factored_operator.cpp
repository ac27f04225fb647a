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

#include "tspm/factored_operator.hpp"

#include <utility>

namespace tspm {

FactoredOperator::FactoredOperator(std::vector<int> factors, Matrix data)
    : factors_(std::move(factors)), data_(std::move(data)) {
  if (factors_.empty()) throw std::invalid_argument("factor list must be non-empty");
  for (int f : factors_) {
    if (f < 1) throw std::invalid_argument("factor dimensions must be >= 1");
  }
  const long long side = factor_product(factors_);
  if (data_.rows() != data_.cols() || data_.rows() != side) {
    throw std::invalid_argument("matrix side does not match the factor product");
  }
}

double FactoredOperator::hermiticity_defect() const {
  return (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
}

bool FactoredOperator::is_hermitian(double tolerance) const {
  return hermiticity_defect() <= tolerance;
}

FactoredOperator FactoredOperator::regrouped(std::vector<int> new_factors) const {
  if (factor_product(new_factors) != factor_product(factors_)) {
    throw std::invalid_argument("regrouped factor list changes the matrix side");
  }
  return FactoredOperator(std::move(new_factors), data_);
}

FactoredOperator FactoredOperator::identity(std::vector<int> factors) {
  const long long side = factor_product(factors);
  return FactoredOperator(std::move(factors), Matrix::Identity(side, side));
}

}  // namespace tspm

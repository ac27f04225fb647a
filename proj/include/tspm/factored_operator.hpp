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

#ifndef TSPM_FACTORED_OPERATOR_HPP
#define TSPM_FACTORED_OPERATOR_HPP

#include <numeric>
#include <vector>

#include "tspm/types.hpp"

namespace tspm {

// Dense complex square matrix tagged with an ordered list of tensor-factor
// dimensions. Indexing is row-major over the product basis |i1...ik> with the
// leftmost factor most significant. Instances are immutable after
// construction and safe to share across threads.
class FactoredOperator {
 public:
  FactoredOperator(std::vector<int> factors, Matrix data);

  const std::vector<int>& factors() const { return factors_; }
  const Matrix& data() const { return data_; }
  int side() const { return static_cast<int>(data_.rows()); }
  int factor(int i) const { return factors_.at(static_cast<std::size_t>(i)); }
  int num_factors() const { return static_cast<int>(factors_.size()); }

  // Hermiticity is a queryable predicate, not an assumption.
  bool is_hermitian(double tolerance = tol::hermiticity) const;
  double hermiticity_defect() const;  // max |A - A^dag| entry

  Complex trace() const { return data_.trace(); }

  // Relabels the factor list without touching the data. The new list must
  // have the same product; used to coalesce contiguous groups.
  FactoredOperator regrouped(std::vector<int> new_factors) const;

  static FactoredOperator identity(std::vector<int> factors);

 private:
  std::vector<int> factors_;
  Matrix data_;
};

// Complex vector tagged with its dimension and (optionally) a tensor-factor
// list for product-structure queries.
struct Ket {
  Vector amps;
  std::vector<int> factors;  // may be empty

  int dim() const { return static_cast<int>(amps.size()); }
  double norm() const { return amps.norm(); }
};

inline long long factor_product(const std::vector<int>& factors) {
  long long p = 1;
  for (int f : factors) p *= f;
  return p;
}

}  // namespace tspm

#endif

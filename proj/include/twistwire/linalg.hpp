/* Copyright 2026 The twistwire Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TWISTWIRE_LINALG_HPP
#define TWISTWIRE_LINALG_HPP

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <memory>
#include <vector>

#include "twistwire/units.hpp"

namespace twistwire {

/// Thrown when a factorization or eigensolve cannot be completed.
struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// LU factorization of a complex sparse matrix (fill-reducing ordering,
/// partial pivoting). Immutable once built; concurrent solves are fine.
class FactorizedSystem {
 public:
  explicit FactorizedSystem(const Eigen::SparseMatrix<cplx>& A);
  ~FactorizedSystem();
  FactorizedSystem(FactorizedSystem&&) noexcept;
  FactorizedSystem& operator=(FactorizedSystem&&) noexcept;

  Eigen::VectorXcd solve(const Eigen::VectorXcd& b) const;
  int dimension() const { return dim_; }
  long fill_nonzeros() const { return fill_nnz_; } ///< nnz of L+U

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int dim_ = 0;
  long fill_nnz_ = 0;
};

inline FactorizedSystem sparse_factor(const Eigen::SparseMatrix<cplx>& A) {
  return FactorizedSystem(A);
}

struct EigenPair {
  cplx value;
  Eigen::VectorXcd vector;
  double residual; ///< ||A v - lambda v|| / ||v||
};

/// k eigenvalues of A nearest sigma by Arnoldi iteration on (A - sigma I)^{-1}.
/// Results sorted by |lambda - sigma|. Throws LinalgError if the residual
/// target is not reached; the message carries the achieved residuals.
std::vector<EigenPair> shift_invert_eigs(const Eigen::SparseMatrix<cplx>& A, cplx sigma, int k,
                                         double tol = 1e-8, int max_restarts = 12);

}  // namespace twistwire

#endif

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "incompat/errors.hpp"

namespace incompat {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Numerical thresholds shared across the library. The rank rule is relative
// to the largest singular value, so integer outputs (rank, spark, order) are
// invariant under rescaling the input.
struct Tolerance {
  double rel_rank_tol = 1e-10;
  double support_tol = 1e-9;

  void validate() const;
};

// Count of singular values above rel_rank_tol * sigma_max * max(rows, cols).
// The zero matrix (and any empty matrix) has rank 0.
int numerical_rank(const CMatrix& m, const Tolerance& tol = {});

// Orthonormal basis of {x : Mx = 0} as columns; column count equals
// cols(M) - numerical_rank(M). A matrix with zero rows yields the identity.
CMatrix nullspace_basis(const CMatrix& m, const Tolerance& tol = {});

// Eigenvalues of a Hermitian matrix, ascending. Throws NotHermitian when
// max|H - H*| exceeds rel_rank_tol * max|H|.
std::vector<double> hermitian_eigenvalues(const CMatrix& h,
                                          const Tolerance& tol = {});

// dim(span(U) ∩ span(V)) = rank(U) + rank(V) - rank([U V]), where the spans
// are of the columns. Row counts must match.
int span_intersection_dim(const CMatrix& u, const CMatrix& v,
                          const Tolerance& tol = {});

void require_finite(const CMatrix& m, const char* ctx);

}  // namespace incompat

#include "incompat/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace incompat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::NotTight: return "NotTight";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::TooFewColumns: return "TooFewColumns";
    case ErrorCode::ZeroCoherence: return "ZeroCoherence";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::TooFewFrames: return "TooFewFrames";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

void Tolerance::validate() const {
  if (!(rel_rank_tol >= 0.0 && rel_rank_tol < 1.0) ||
      !(support_tol >= 0.0 && support_tol < 1.0)) {
    fail(ErrorCode::InvalidInput, "tolerances must lie in [0, 1)");
  }
}

void require_finite(const CMatrix& m, const char* ctx) {
  if (!m.allFinite()) {
    fail(ErrorCode::InvalidInput,
         std::string(ctx) + ": non-finite entries");
  }
}

int numerical_rank(const CMatrix& m, const Tolerance& tol) {
  tol.validate();
  if (m.rows() == 0 || m.cols() == 0) return 0;
  require_finite(m, "numerical_rank");

  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double threshold =
      tol.rel_rank_tol * sv(0) * static_cast<double>(std::max(m.rows(), m.cols()));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

CMatrix nullspace_basis(const CMatrix& m, const Tolerance& tol) {
  tol.validate();
  if (m.cols() == 0) return CMatrix(m.rows() == 0 ? 0 : m.rows(), 0);
  if (m.rows() == 0) return CMatrix::Identity(m.cols(), m.cols());
  require_finite(m, "nullspace_basis");

  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold =
      tol.rel_rank_tol * sigma_max * static_cast<double>(std::max(m.rows(), m.cols()));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  // Trailing right-singular vectors span the nullspace.
  return svd.matrixV().rightCols(m.cols() - rank);
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h, const Tolerance& tol) {
  tol.validate();
  if (h.rows() != h.cols()) {
    fail(ErrorCode::NotHermitian, "hermitian_eigenvalues: matrix not square");
  }
  require_finite(h, "hermitian_eigenvalues");
  const double scale = h.cwiseAbs().maxCoeff();
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol.rel_rank_tol * scale) {
    fail(ErrorCode::NotHermitian, "hermitian_eigenvalues: symmetry check failed");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

int span_intersection_dim(const CMatrix& u, const CMatrix& v, const Tolerance& tol) {
  if (u.rows() != v.rows()) {
    fail(ErrorCode::DimensionMismatch,
         "span_intersection_dim: row counts differ");
  }
  CMatrix joined(u.rows(), u.cols() + v.cols());
  joined << u, v;
  return numerical_rank(u, tol) + numerical_rank(v, tol) -
         numerical_rank(joined, tol);
}

}  // namespace incompat

#include "incompat/frame.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <cmath>

namespace incompat {

Frame::Frame(int dim, std::vector<CVector> vectors, std::string label,
             const Tolerance& tol)
    : dim_(dim), vectors_(std::move(vectors)), label_(std::move(label)) {
  tol.validate();
  if (dim_ < 1) fail(ErrorCode::InvalidShape, "frame dimension must be >= 1");
  if (vectors_.empty()) fail(ErrorCode::InvalidShape, "frame needs >= 1 vector");
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    const CVector& v = vectors_[k];
    if (v.size() != dim_) {
      fail(ErrorCode::DimensionMismatch,
           "frame '" + label_ + "': vector " + std::to_string(k + 1) +
               " has wrong dimension");
    }
    if (!v.allFinite()) {
      fail(ErrorCode::InvalidInput,
           "frame '" + label_ + "': vector " + std::to_string(k + 1) +
               " has non-finite entries");
    }
    if (v.norm() <= tol.support_tol) {
      fail(ErrorCode::ZeroVector,
           "frame '" + label_ + "': vector " + std::to_string(k + 1) +
               " is numerically zero");
    }
  }
  operator_ = CMatrix::Zero(dim_, dim_);
  for (const CVector& v : vectors_) operator_ += v * v.adjoint();
}

CMatrix Frame::as_columns() const {
  CMatrix m(dim_, size());
  for (int k = 0; k < size(); ++k) m.col(k) = vectors_[std::size_t(k)];
  return m;
}

Povm::Povm(int dim, std::vector<CVector> measurement_vectors)
    : dim_(dim), vectors_(std::move(measurement_vectors)) {
  if (dim_ < 1) fail(ErrorCode::InvalidShape, "povm dimension must be >= 1");
  for (const CVector& v : vectors_) {
    if (v.size() != dim_) {
      fail(ErrorCode::DimensionMismatch, "povm: measurement vector dimension");
    }
  }
  if (identity_residual() > kPovmResidualTol) {
    fail(ErrorCode::InvalidInput, "povm: effects do not sum to the identity");
  }
}

double Povm::identity_residual() const {
  CMatrix sum = CMatrix::Zero(dim_, dim_);
  for (const CVector& v : vectors_) sum += v * v.adjoint();
  return (sum - CMatrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
}

FrameBounds frame_bounds(const Frame& f, const Tolerance& tol) {
  const std::vector<double> ev = hermitian_eigenvalues(f.frame_operator(), tol);
  FrameBounds b;
  b.lower = ev.front();
  b.upper = ev.back();
  if (b.lower <= f.dim() * tol.rel_rank_tol * b.upper) {
    fail(ErrorCode::NotAFrame,
         "frame '" + f.label() + "' does not span the space");
  }
  b.tight = (b.upper - b.lower) <= kTightTol * b.upper;
  if (b.tight) b.tight_constant = 0.5 * (b.lower + b.upper);
  return b;
}

Frame canonical_dual(const Frame& f, const Tolerance& tol) {
  frame_bounds(f, tol);  // spanning check
  Eigen::LDLT<CMatrix> solver(f.frame_operator());
  std::vector<CVector> duals;
  duals.reserve(std::size_t(f.size()));
  for (const CVector& v : f.vectors()) duals.push_back(solver.solve(v));
  return Frame(f.dim(), std::move(duals), f.label() + "*", tol);
}

Povm to_povm(const Frame& f, const Tolerance& tol) {
  const FrameBounds b = frame_bounds(f, tol);
  if (!b.tight) {
    fail(ErrorCode::NotTight, "frame '" + f.label() + "' is not tight");
  }
  const double scale = 1.0 / std::sqrt(*b.tight_constant);
  std::vector<CVector> mu;
  mu.reserve(std::size_t(f.size()));
  for (const CVector& v : f.vectors()) mu.push_back(scale * v);
  return Povm(f.dim(), std::move(mu));
}

std::vector<double> measurement_probabilities(const Povm& p, const CVector& state) {
  if (state.size() != p.dim()) {
    fail(ErrorCode::DimensionMismatch, "state dimension does not match povm");
  }
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    fail(ErrorCode::NotNormalized, "state is not unit norm");
  }
  std::vector<double> probs;
  probs.reserve(std::size_t(p.size()));
  for (const CVector& mu : p.measurement_vectors()) {
    probs.push_back(std::norm(mu.dot(state)));
  }
  return probs;
}

int support_count(const Frame& f, const CVector& x, const Tolerance& tol) {
  tol.validate();
  if (x.size() != f.dim()) {
    fail(ErrorCode::DimensionMismatch, "support_count: state dimension");
  }
  const double xnorm = x.norm();
  if (xnorm <= tol.support_tol) {
    fail(ErrorCode::ZeroVector, "support_count: state is numerically zero");
  }
  int count = 0;
  for (const CVector& v : f.vectors()) {
    if (std::abs(v.dot(x)) > tol.support_tol * v.norm() * xnorm) ++count;
  }
  return count;
}

Frame random_parseval_frame(int dim, int n, std::uint64_t seed, std::string label) {
  if (dim < 1 || n < dim) {
    fail(ErrorCode::InvalidShape, "random_parseval_frame requires n >= d >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the factorization is unique (Haar measure).
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= std::conj(d) / std::abs(d);
  }
  std::vector<CVector> vectors;
  vectors.reserve(std::size_t(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    vectors.push_back(q.block(0, j, dim, 1));
  }
  return Frame(dim, std::move(vectors), std::move(label));
}

CVector random_unit_state(int dim, std::mt19937_64& rng, bool real_only) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector x(dim);
  do {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = gauss(rng);
      const double im = real_only ? 0.0 : gauss(rng);
      x(i) = Complex(re, im);
    }
  } while (x.norm() < 1e-6);
  x.normalize();
  return x;
}

}  // namespace incompat

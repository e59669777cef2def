#include "incompat/spark.hpp"

#include <cmath>

namespace incompat {

SparkResult spark(const CMatrix& m, const Tolerance& tol, const Budget& budget) {
  if (m.cols() < 1) fail(ErrorCode::TooFewColumns, "spark: empty matrix");
  require_finite(m, "spark");
  budget.check_instance(int(m.rows()), int(m.cols()));

  SparkResult result;
  const int cols = int(m.cols());
  const int rank = numerical_rank(m, tol);
  if (rank == cols) return result;  // all columns independent

  // Any rank+1 columns are dependent, so the scan terminates by then.
  CMatrix sub(m.rows(), 1);
  for (int k = 1; k <= rank + 1; ++k) {
    sub.resize(m.rows(), k);
    std::optional<IndexSet> found;
    for_each_combination(cols, k, [&](const IndexSet& subset) {
      budget.charge(result.columns_checked);
      for (int i = 0; i < k; ++i) sub.col(i) = m.col(subset[std::size_t(i)] - 1);
      if (numerical_rank(sub, tol) < k) {
        found = subset;
        return false;  // lexicographically first witness wins
      }
      return true;
    });
    if (found) {
      result.value = k;
      result.witness = std::move(found);
      return result;
    }
  }
  fail(ErrorCode::InvalidInput, "spark: scan exhausted without a witness");
}

double dictionary_coherence(const CMatrix& m) {
  if (m.cols() < 2) {
    fail(ErrorCode::TooFewColumns, "dictionary_coherence needs >= 2 columns");
  }
  require_finite(m, "dictionary_coherence");
  CMatrix unit = m;
  for (Eigen::Index j = 0; j < unit.cols(); ++j) {
    const double norm = unit.col(j).norm();
    if (norm <= 0.0) {
      fail(ErrorCode::InvalidInput, "dictionary_coherence: zero column");
    }
    unit.col(j) /= norm;
  }
  double mu = 0.0;
  for (Eigen::Index i = 0; i < unit.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < unit.cols(); ++j) {
      mu = std::max(mu, std::abs(unit.col(i).dot(unit.col(j))));
    }
  }
  return mu;
}

double spark_lower_bound(const CMatrix& m, const Tolerance& tol) {
  const double mu = dictionary_coherence(m);
  if (mu <= tol.rel_rank_tol) {
    fail(ErrorCode::ZeroCoherence,
         "spark_lower_bound: coherence vanishes, bound is infinite");
  }
  return 1.0 + 1.0 / mu;
}

double mutual_coherence(const Frame& a, const Frame& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimensionMismatch, "mutual_coherence: frame dimensions differ");
  }
  double best = 0.0;
  for (const CVector& u : a.vectors()) {
    for (const CVector& v : b.vectors()) {
      best = std::max(best, std::abs(u.dot(v)));
    }
  }
  return best;
}

}  // namespace incompat

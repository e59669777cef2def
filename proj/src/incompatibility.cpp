#include "incompat/incompatibility.hpp"

#include <cmath>
#include <limits>

namespace incompat {

const char* method_name(Method m) {
  return m == Method::SubsetRank ? "subset-rank" : "support-oracle";
}

CVector canonicalize_state(CVector x, const Tolerance& tol) {
  const double norm = x.norm();
  if (norm <= tol.support_tol) {
    fail(ErrorCode::ZeroVector, "canonicalize_state: zero state");
  }
  x /= norm;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double mag = std::abs(x(i));
    if (mag > tol.support_tol) {
      x *= std::conj(x(i)) / mag;
      break;
    }
  }
  return x;
}

namespace {

CMatrix kept_columns(const Frame& a, const Frame& b, const IndexSet& sa,
                     const IndexSet& sb) {
  CMatrix m(a.dim(), sa.size() + sb.size());
  Eigen::Index c = 0;
  for (int k : sa) m.col(c++) = a.vector(k - 1);
  for (int j : sb) m.col(c++) = b.vector(j - 1);
  return m;
}

// State annihilating every column of `cols`: a nullspace vector of the
// stacked adjoints.
CVector annihilating_state(const CMatrix& cols, const Tolerance& tol) {
  const CMatrix basis = nullspace_basis(CMatrix(cols.adjoint()), tol);
  if (basis.cols() == 0) {
    fail(ErrorCode::InvalidInput, "annihilating_state: trivial nullspace");
  }
  return canonicalize_state(basis.col(0), tol);
}

void require_same_dim(const Frame& a, const Frame& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimensionMismatch, "frames live in different dimensions");
  }
}

}  // namespace

IncompatibilityResult annihilation_order(const Frame& a, const Frame& b,
                                         const Tolerance& tol, const Budget& budget) {
  require_same_dim(a, b);
  const int m = a.size(), n = b.size(), d = a.dim();
  budget.check_instance(d, m + n);

  long long visited = 0;
  for (int sum = 2; sum <= m + n; ++sum) {
    std::optional<SubsetSelection> best;
    for (int i = std::max(1, sum - n); i <= std::min(m, sum - 1); ++i) {
      const int j = sum - i;
      for_each_combination(m, i, [&](const IndexSet& s) {
        for_each_combination(n, j, [&](const IndexSet& t) {
          budget.charge(visited);
          SubsetSelection sel{s, t, m, n};
          const CMatrix complement =
              kept_columns(a, b, sel.s_complement(), sel.t_complement());
          const int rank = complement.cols() == 0 ? 0 : numerical_rank(complement, tol);
          if (rank < d && (!best || lex_less(sel, *best))) best = std::move(sel);
          return true;
        });
        return true;
      });
    }
    if (best) {
      IncompatibilityResult result;
      result.order = sum;
      result.witness_subsets = *best;
      result.witness_state = annihilating_state(
          kept_columns(a, b, best->s_complement(), best->t_complement()), tol);
      result.method = Method::SubsetRank;
      return result;
    }
  }
  fail(ErrorCode::InvalidInput, "annihilation_order: no selection found");
}

IncompatibilityResult incompatibility_order(const Frame& a, const Frame& b,
                                            const Tolerance& tol,
                                            const Budget& budget) {
  for (const Frame* f : {&a, &b}) {
    if (!frame_bounds(*f, tol).tight) {
      fail(ErrorCode::NotTight,
           "incompatibility_order: frame '" + f->label() + "' is not tight");
    }
  }
  return annihilation_order(a, b, tol, budget);
}

IncompatibilityResult min_support_sum(const Frame& a, const Frame& b,
                                      const Tolerance& tol, const Budget& budget) {
  require_same_dim(a, b);
  const int m = a.size(), n = b.size(), d = a.dim();
  const int total = m + n;
  budget.check_instance(d, total);

  const CVector* combined[2] = {a.vectors().data(), b.vectors().data()};
  auto vector_at = [&](int idx) -> const CVector& {
    return idx <= m ? combined[0][idx - 1] : combined[1][idx - m - 1];
  };

  int best_count = std::numeric_limits<int>::max();
  CVector best_state;
  long long visited = 0;

  // Every optimal state lies in the nullspace of some set of fewer than d
  // frame vectors (a maximal independent subset of its zero pattern), and
  // conversely any state in that nullspace does at least as well. Scanning
  // all such sets is therefore exhaustive.
  CMatrix rows;
  for (int w = 1; w < d; ++w) {
    rows.resize(w, d);
    for_each_combination(total, w, [&](const IndexSet& zero_set) {
      budget.charge(visited);
      for (int i = 0; i < w; ++i) rows.row(i) = vector_at(zero_set[std::size_t(i)]).adjoint();
      const CMatrix basis = nullspace_basis(rows, tol);
      if (basis.cols() == 0) return true;
      const CVector x = basis.col(0);
      const int count = support_count(a, x, tol) + support_count(b, x, tol);
      if (count < best_count) {
        best_count = count;
        best_state = x;
      }
      return true;
    });
  }
  if (d == 1 || best_count == std::numeric_limits<int>::max()) {
    // No forced zeros possible (or helpful); fall back to a fixed generic state.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    const CVector x = random_unit_state(d, rng);
    const int count = support_count(a, x, tol) + support_count(b, x, tol);
    if (count < best_count) {
      best_count = count;
      best_state = x;
    }
  }

  IncompatibilityResult result;
  result.order = best_count;
  result.method = Method::SupportOracle;
  result.witness_state = canonicalize_state(best_state, tol);
  SubsetSelection sel;
  sel.m = m;
  sel.n = n;
  for (int k = 1; k <= m; ++k) {
    if (std::abs(a.vector(k - 1).dot(result.witness_state)) >
        tol.support_tol * a.vector(k - 1).norm()) {
      sel.S.push_back(k);
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (std::abs(b.vector(j - 1).dot(result.witness_state)) >
        tol.support_tol * b.vector(j - 1).norm()) {
      sel.T.push_back(j);
    }
  }
  result.witness_subsets = std::move(sel);
  return result;
}

ReconstructionResult minimal_reconstruction_number(const Frame& a, const Frame& b,
                                                   const Tolerance& tol,
                                                   const Budget& budget) {
  require_same_dim(a, b);
  const int m = a.size(), n = b.size(), d = a.dim();
  budget.check_instance(d, m + n);

  long long visited = 0;
  // Proper subsets only; scan totals from above so the first hit is t_min.
  for (int sum = m + n - 2; sum >= 0; --sum) {
    std::optional<SubsetSelection> best;
    for (int i = std::max(0, sum - (n - 1)); i <= std::min(m - 1, sum); ++i) {
      const int j = sum - i;
      if (j > n - 1) continue;
      for_each_combination(m, i, [&](const IndexSet& s) {
        for_each_combination(n, j, [&](const IndexSet& t) {
          budget.charge(visited);
          SubsetSelection sel{s, t, m, n};
          const CMatrix kept = kept_columns(a, b, s, t);
          const int rank = kept.cols() == 0 ? 0 : numerical_rank(kept, tol);
          if (rank < d && (!best || lex_less(sel, *best))) best = std::move(sel);
          return true;
        });
        return true;
      });
    }
    if (best) return ReconstructionResult{sum, *best};
  }
  fail(ErrorCode::InvalidInput, "minimal_reconstruction_number: no pair found");
}

double combined_lower_frame_bound(const Frame& a, const Frame& b,
                                  const SubsetSelection& sel, const Tolerance& tol) {
  require_same_dim(a, b);
  if (sel.m != a.size() || sel.n != b.size()) {
    fail(ErrorCode::InvalidInput, "selection sizes do not match the frames");
  }
  sel.validate();
  const int d = a.dim();
  CMatrix op = CMatrix::Zero(d, d);
  for (int k : sel.s_complement()) op += a.vector(k - 1) * a.vector(k - 1).adjoint();
  for (int j : sel.t_complement()) op += b.vector(j - 1) * b.vector(j - 1).adjoint();
  const std::vector<double> ev = hermitian_eigenvalues(op, tol);
  if (ev.front() <= d * tol.rel_rank_tol * std::max(ev.back(), 0.0)) {
    fail(ErrorCode::NotSpanning,
         "complement union does not span (selection too large?)");
  }
  return ev.front();
}

UncertaintyConstants uncertainty_constants(const Frame& a, const Frame& b,
                                           const Tolerance& tol,
                                           const Budget& budget) {
  const FrameBounds ba = frame_bounds(a, tol);
  const FrameBounds bb = frame_bounds(b, tol);
  if (!ba.tight || !bb.tight) {
    fail(ErrorCode::NotTight, "uncertainty_constants requires tight frames");
  }

  UncertaintyConstants out;
  out.alpha = *ba.tight_constant;
  out.beta = *bb.tight_constant;
  out.order = incompatibility_order(a, b, tol, budget).order;

  const int m = a.size(), n = b.size();
  double c_s = std::numeric_limits<double>::infinity();
  for (int sum = 0; sum < out.order; ++sum) {
    for (int i = std::max(0, sum - n); i <= std::min(m, sum); ++i) {
      const int j = sum - i;
      if (j > n) continue;
      for_each_combination(m, i, [&](const IndexSet& s) {
        for_each_combination(n, j, [&](const IndexSet& t) {
          SubsetSelection sel{s, t, m, n};
          const double value = combined_lower_frame_bound(a, b, sel, tol);
          c_s = std::min(c_s, value);
          out.entries.push_back({std::move(sel), value});
          return true;
        });
        return true;
      });
    }
  }
  out.C_s = c_s;
  out.C = 1.0 / std::min({out.alpha, out.beta, out.C_s});
  return out;
}

SupportUncertaintyReport verify_support_uncertainty(
    const Frame& a, const Frame& b, const IncompatibilityResult& result,
    int trials, std::uint64_t seed, const Tolerance& tol) {
  require_same_dim(a, b);
  SupportUncertaintyReport report;
  report.trials = trials;
  report.min_observed = std::numeric_limits<int>::max();

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const CVector x = random_unit_state(a.dim(), rng);
    const int observed = support_count(a, x, tol) + support_count(b, x, tol);
    report.min_observed = std::min(report.min_observed, observed);
    if (observed < result.order && !report.first_counterexample) {
      report.first_counterexample = SupportCounterexample{t, x, observed};
    }
  }
  const int witness_sum = support_count(a, result.witness_state, tol) +
                          support_count(b, result.witness_state, tol);
  report.witness_attains = (witness_sum == result.order);
  report.pass = !report.first_counterexample && report.witness_attains;
  if (trials == 0) report.min_observed = result.order;
  return report;
}

}  // namespace incompat

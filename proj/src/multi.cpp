#include "incompat/multi.hpp"

#include <cmath>
#include <limits>

namespace incompat {

namespace {

void require_multi(const std::vector<Frame>& frames) {
  if (frames.size() < 2) {
    fail(ErrorCode::TooFewFrames, "need at least two frames");
  }
  const int d = frames.front().dim();
  for (const Frame& f : frames) {
    if (f.dim() != d) {
      fail(ErrorCode::DimensionMismatch, "frames live in different dimensions");
    }
  }
}

int total_vectors(const std::vector<Frame>& frames) {
  int t = 0;
  for (const Frame& f : frames) t += f.size();
  return t;
}

// Columns of every complement vector under the selection.
CMatrix complement_columns(const std::vector<Frame>& frames,
                           const MultiSelection& sel) {
  const int d = frames.front().dim();
  int cols = 0;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    cols += frames[i].size() - int(sel.subsets[i].size());
  }
  CMatrix m(d, cols);
  Eigen::Index c = 0;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    for (int k : complement_of(sel.subsets[i], frames[i].size())) {
      m.col(c++) = frames[i].vector(k - 1);
    }
  }
  return m;
}

// Enumerates, at a fixed total, every all-nonempty selection tuple;
// keeps the lexicographically least one whose complement drops rank.
void scan_selections(const std::vector<Frame>& frames, int frame_idx, int remaining,
                     MultiSelection& current, std::optional<MultiSelection>& best,
                     const Tolerance& tol, const Budget& budget, long long& visited) {
  const int n_frames = int(frames.size());
  if (frame_idx == n_frames) {
    if (remaining != 0) return;
    budget.charge(visited);
    const CMatrix complement = complement_columns(frames, current);
    const int rank = complement.cols() == 0 ? 0 : numerical_rank(complement, tol);
    if (rank < frames.front().dim() && (!best || lex_less(current, *best))) {
      best = current;
    }
    return;
  }
  const int m_i = frames[std::size_t(frame_idx)].size();
  const int frames_left = n_frames - frame_idx - 1;
  const int hi = std::min(m_i, remaining - frames_left);
  for (int k = 1; k <= hi; ++k) {
    for_each_combination(m_i, k, [&](const IndexSet& s) {
      current.subsets[std::size_t(frame_idx)] = s;
      scan_selections(frames, frame_idx + 1, remaining - k, current, best, tol,
                      budget, visited);
      return true;
    });
  }
  current.subsets[std::size_t(frame_idx)].clear();
}

MultiSelection supports_of(const std::vector<Frame>& frames, const CVector& x,
                           const Tolerance& tol) {
  MultiSelection sel;
  for (const Frame& f : frames) {
    IndexSet s;
    for (int k = 1; k <= f.size(); ++k) {
      if (std::abs(f.vector(k - 1).dot(x)) > tol.support_tol * f.vector(k - 1).norm() * x.norm()) {
        s.push_back(k);
      }
    }
    sel.subsets.push_back(std::move(s));
    sel.sizes.push_back(f.size());
  }
  return sel;
}

}  // namespace

MultiResult multi_annihilation_order(const std::vector<Frame>& frames,
                                     const Tolerance& tol, const Budget& budget) {
  require_multi(frames);
  const int d = frames.front().dim();
  const int total = total_vectors(frames);
  budget.check_instance(d, total);

  long long visited = 0;
  const int n_frames = int(frames.size());
  for (int sum = n_frames; sum <= total; ++sum) {
    std::optional<MultiSelection> best;
    MultiSelection current;
    current.subsets.assign(std::size_t(n_frames), {});
    for (const Frame& f : frames) current.sizes.push_back(f.size());
    scan_selections(frames, 0, sum, current, best, tol, budget, visited);
    if (best) {
      MultiResult result;
      result.order = sum;
      result.selection = *best;
      result.method = Method::SubsetRank;
      const CMatrix complement = complement_columns(frames, *best);
      const CMatrix basis = nullspace_basis(CMatrix(complement.adjoint()), tol);
      result.witness = canonicalize_state(basis.col(0), tol);
      return result;
    }
  }
  fail(ErrorCode::InvalidInput, "multi_annihilation_order: no selection found");
}

MultiResult multi_min_support_sum(const std::vector<Frame>& frames,
                                  const Tolerance& tol, const Budget& budget) {
  require_multi(frames);
  const int d = frames.front().dim();
  const int total = total_vectors(frames);
  budget.check_instance(d, total);

  std::vector<const CVector*> all;
  all.reserve(std::size_t(total));
  for (const Frame& f : frames) {
    for (const CVector& v : f.vectors()) all.push_back(&v);
  }

  int best_count = std::numeric_limits<int>::max();
  CVector best_state;
  long long visited = 0;
  CMatrix rows;
  for (int w = 1; w < d; ++w) {
    rows.resize(w, d);
    for_each_combination(total, w, [&](const IndexSet& zero_set) {
      budget.charge(visited);
      for (int i = 0; i < w; ++i) {
        rows.row(i) = all[std::size_t(zero_set[std::size_t(i)] - 1)]->adjoint();
      }
      const CMatrix basis = nullspace_basis(rows, tol);
      if (basis.cols() == 0) return true;
      const CVector x = basis.col(0);
      int count = 0;
      for (const Frame& f : frames) count += support_count(f, x, tol);
      if (count < best_count) {
        best_count = count;
        best_state = x;
      }
      return true;
    });
  }
  if (d == 1 || best_count == std::numeric_limits<int>::max()) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    const CVector x = random_unit_state(d, rng);
    int count = 0;
    for (const Frame& f : frames) count += support_count(f, x, tol);
    if (count < best_count) {
      best_count = count;
      best_state = x;
    }
  }

  MultiResult result;
  result.order = best_count;
  result.method = Method::SupportOracle;
  result.witness = canonicalize_state(best_state, tol);
  result.selection = supports_of(frames, result.witness, tol);
  return result;
}

MultiResult multi_incompatibility_order(const std::vector<Frame>& frames,
                                        const Tolerance& tol, const Budget& budget,
                                        bool allow_support_oracle) {
  require_multi(frames);
  bool all_tight = true;
  for (const Frame& f : frames) {
    if (!frame_bounds(f, tol).tight) {
      all_tight = false;
      if (!allow_support_oracle) {
        fail(ErrorCode::NotTight, "frame '" + f.label() + "' is not tight");
      }
    }
  }
  return all_tight ? multi_annihilation_order(frames, tol, budget)
                   : multi_min_support_sum(frames, tol, budget);
}

MultiResult pairwise_orders(const std::vector<Frame>& frames, const Tolerance& tol,
                            const Budget& budget, bool allow_support_oracle) {
  MultiResult result =
      multi_incompatibility_order(frames, tol, budget, allow_support_oracle);

  const int n = int(frames.size());
  std::vector<bool> tight(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    tight[std::size_t(i)] = frame_bounds(frames[std::size_t(i)], tol).tight;
  }
  result.pairwise_sum = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PairwiseEntry e;
      e.i = i + 1;
      e.j = j + 1;
      e.both_tight = tight[std::size_t(i)] && tight[std::size_t(j)];
      e.method = e.both_tight ? Method::SubsetRank : Method::SupportOracle;
      const Frame& fa = frames[std::size_t(i)];
      const Frame& fb = frames[std::size_t(j)];
      e.order_subset_rank = annihilation_order(fa, fb, tol, budget).order;
      e.order_support_oracle = min_support_sum(fa, fb, tol, budget).order;
      e.engines_agree = (e.order_subset_rank == e.order_support_oracle);
      e.order = e.both_tight ? e.order_subset_rank : e.order_support_oracle;
      result.pairwise_sum += e.order;
      result.pairwise.push_back(e);
    }
  }
  result.bound_lhs = 0.5 * result.pairwise_sum;
  result.bound_holds = result.bound_lhs <= double(result.order);
  result.strict = result.bound_lhs < double(result.order);
  result.general_bound_holds = result.pairwise_sum <= (n - 1) * result.order;
  return result;
}

}  // namespace incompat

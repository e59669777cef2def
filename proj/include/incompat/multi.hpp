#pragma once

#include <vector>

#include "incompat/incompatibility.hpp"

namespace incompat {

struct PairwiseEntry {
  int i = 0, j = 0;  // 1-based frame indices
  int order = 0;
  int order_subset_rank = 0;
  int order_support_oracle = 0;
  bool engines_agree = false;
  bool both_tight = false;
  Method method = Method::SupportOracle;  // SubsetRank only when both tight
};

struct MultiResult {
  int order = 0;
  MultiSelection selection;
  CVector witness;
  Method method = Method::SubsetRank;

  // Filled by pairwise_orders:
  std::vector<PairwiseEntry> pairwise;  // all i < j
  int pairwise_sum = 0;                 // sum of s_ij over i < j
  double bound_lhs = 0.0;               // pairwise_sum / 2
  bool bound_holds = false;             // bound_lhs <= order
  bool strict = false;                  // bound_lhs < order
  // The half-sum form is published for triples and can fail beyond them
  // (each frame joins n-1 pairs); this is the provable n-frame version
  // pairwise_sum <= (n-1) * order.
  bool general_bound_holds = false;
};

// Smallest sum of nonempty subset sizes over the frame list such that the
// concatenated complement vectors drop rank below d; ties broken by
// lexicographic selection order. No tightness assumption.
MultiResult multi_annihilation_order(const std::vector<Frame>& frames,
                                     const Tolerance& tol = {},
                                     const Budget& budget = {});

// Oracle: min over nonzero x of the total support across all frames.
MultiResult multi_min_support_sum(const std::vector<Frame>& frames,
                                  const Tolerance& tol = {},
                                  const Budget& budget = {});

// Order of the frame list. Tight lists go through the subset-rank engine;
// lists with a non-tight member use the support oracle when the caller
// opts in, and throw NotTight otherwise. Needs >= 2 frames.
MultiResult multi_incompatibility_order(const std::vector<Frame>& frames,
                                        const Tolerance& tol = {},
                                        const Budget& budget = {},
                                        bool allow_support_oracle = false);

// Full result: order, the pairwise order table (each pair run through both
// engines), and the half-sum bound (1/2) sum_{i<j} s_ij <= s.
MultiResult pairwise_orders(const std::vector<Frame>& frames,
                            const Tolerance& tol = {}, const Budget& budget = {},
                            bool allow_support_oracle = true);

}  // namespace incompat

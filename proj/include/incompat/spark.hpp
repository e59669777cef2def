#pragma once

#include <optional>

#include "incompat/frame.hpp"
#include "incompat/subsets.hpp"

namespace incompat {

// Result of the minimal-dependent-subset search. A matrix whose columns are
// all linearly independent has no finite spark; that case is a distinct
// state, never a sentinel value.
struct SparkResult {
  std::optional<int> value;          // empty => infinite
  std::optional<IndexSet> witness;   // 1-based column indices, minimal dependent set
  long long columns_checked = 0;

  bool infinite() const { return !value.has_value(); }
};

struct CoherenceReport {
  double dictionary_mu = 0.0;
  double mutual_M = 0.0;
  std::optional<double> spark_lower_bound;  // empty => infinite (mu ~ 0)
};

// Smallest k admitting k linearly dependent columns, found by scanning
// subset sizes in ascending order and subsets lexicographically; the first
// dependent subset is the witness. NP-hard in general; the budget guard
// keeps this at desk scale.
SparkResult spark(const CMatrix& m, const Tolerance& tol = {},
                  const Budget& budget = {});

// Max |<c_i, c_j>| over distinct columns after unit-normalizing them.
double dictionary_coherence(const CMatrix& m);

// 1 + 1/mu(M), valid for unit-norm columns; ceil to get the integer bound
// spark(M) >= ceil(1 + 1/mu). Throws ZeroCoherence when mu vanishes (the
// bound is vacuously infinite).
double spark_lower_bound(const CMatrix& m, const Tolerance& tol = {});

// Max |<a_k, b_j>| over raw (unnormalized) frame vectors.
double mutual_coherence(const Frame& a, const Frame& b);

}  // namespace incompat

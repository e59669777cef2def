#pragma once

#include <cstdint>
#include <optional>

#include "incompat/frame.hpp"
#include "incompat/spark.hpp"
#include "incompat/subsets.hpp"

namespace incompat {

enum class Method { SubsetRank, SupportOracle };

const char* method_name(Method m);

// Order s together with an achieving selection (|S| + |T| = s) and a state
// concentrated on it. The witness is unit-norm with its first nonzero
// coordinate real positive, which removes the global phase.
struct IncompatibilityResult {
  int order = 0;
  SubsetSelection witness_subsets;
  CVector witness_state;
  Method method = Method::SubsetRank;
};

struct ReconstructionResult {
  int t_min = 0;
  SubsetSelection max_nonspanning;  // kept sets of a largest non-spanning pair
};

struct UncertaintyConstantEntry {
  SubsetSelection selection;
  double value = 0.0;  // lower frame bound of the complement union
};

struct UncertaintyConstants {
  double alpha = 0.0;  // tight constant of A
  double beta = 0.0;   // tight constant of B
  int order = 0;
  std::vector<UncertaintyConstantEntry> entries;  // all |S|+|T| < order
  double C_s = 0.0;
  double C = 0.0;  // 1 / min{alpha, beta, C_s}
};

struct SupportCounterexample {
  int trial = 0;
  CVector state;
  int observed = 0;
};

struct SupportUncertaintyReport {
  bool pass = false;
  int trials = 0;
  int min_observed = 0;
  bool witness_attains = false;
  std::optional<SupportCounterexample> first_counterexample;
};

// Smallest |S| + |T| over nonempty S, T such that the complement columns
// [A_{S^c} B_{T^c}] drop rank below d, i.e. some nonzero state annihilates
// every complement vector. Sums are scanned ascending; the reported
// selection is the lexicographically least minimizer. Makes no tightness
// assumption; for spanning frames the value equals the support minimum.
IncompatibilityResult annihilation_order(const Frame& a, const Frame& b,
                                         const Tolerance& tol = {},
                                         const Budget& budget = {});

// The order of incompatibility of two tight frames (method SubsetRank).
// Throws NotTight when either frame fails the tightness check.
IncompatibilityResult incompatibility_order(const Frame& a, const Frame& b,
                                            const Tolerance& tol = {},
                                            const Budget& budget = {});

// Independent oracle: min over nonzero x of n_A(x) + n_B(x), found by
// enumerating forced-zero patterns of size < d and counting the supports of
// a nullspace state for each. Valid for arbitrary frames.
IncompatibilityResult min_support_sum(const Frame& a, const Frame& b,
                                      const Tolerance& tol = {},
                                      const Budget& budget = {});

// Largest |S| + |T| over proper subsets whose kept union fails to span,
// scanned from above; equals the minimal t beyond which every larger proper
// pair spans.
ReconstructionResult minimal_reconstruction_number(const Frame& a, const Frame& b,
                                                   const Tolerance& tol = {},
                                                   const Budget& budget = {});

// Smallest eigenvalue of the frame operator of {a_k}_{S^c} ∪ {b_j}_{T^c}.
// Throws NotSpanning when that union is not a frame.
double combined_lower_frame_bound(const Frame& a, const Frame& b,
                                  const SubsetSelection& sel,
                                  const Tolerance& tol = {});

// Constants of the inequality |x|^2 <= C (sum_{S^c} |<x,a_k>|^2 +
// sum_{T^c} |<x,b_j>|^2) over all selections with |S| + |T| < s.
UncertaintyConstants uncertainty_constants(const Frame& a, const Frame& b,
                                           const Tolerance& tol = {},
                                           const Budget& budget = {});

// Samples seeded random unit states and checks n_A + n_B >= order, plus that
// the stored witness attains equality. Violations are reported, not thrown.
SupportUncertaintyReport verify_support_uncertainty(
    const Frame& a, const Frame& b, const IncompatibilityResult& result,
    int trials, std::uint64_t seed, const Tolerance& tol = {});

// Unit-norm representative with the first coordinate above the support
// threshold made real positive.
CVector canonicalize_state(CVector x, const Tolerance& tol = {});

}  // namespace incompat

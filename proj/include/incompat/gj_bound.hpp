#pragma once

#include <cstdint>
#include <optional>

#include "incompat/frame.hpp"
#include "incompat/subsets.hpp"

namespace incompat {

// Everything entering the two-frame coherence uncertainty bound
//   C(S,T) |x| <= (sum_{S^c} |<x,a_k>|^2)^{1/2} + (sum_{T^c} |<x,b_j>|^2)^{1/2},
// stated for frame bounds alpha1 <= beta1 of A and alpha2 <= beta2 of B,
// the canonical dual A*, and raw mutual coherences M(A*, B), M(A*, A).
// The constant is evaluated exactly as printed in its source statement; the
// verification harness measures the inequality empirically instead of
// trusting the derivation (see README on the bound-role caveat).
struct GJConstants {
  double alpha1 = 0.0, beta1 = 0.0;  // bounds of A
  double alpha2 = 0.0, beta2 = 0.0;  // bounds of B
  double M_dualA_B = 0.0;            // M(A*, B)
  double M_dualA_A = 0.0;            // M(A*, A), all index pairs
  int m = 0;                         // size of A
  double threshold = 0.0;            // (beta1/alpha2) / M(A*,B)^2
  bool admissible = false;           // |S||T| < threshold
  double C_ST = 0.0;
};

struct GJViolation {
  int trial = 0;
  CVector state;
  double lhs = 0.0;  // C(S,T) |x|
  double rhs = 0.0;
};

struct GJVerification {
  GJConstants constants;
  bool pass = false;
  int trials = 0;
  double min_ratio = 0.0;  // min over trials of rhs / lhs
  std::optional<GJViolation> first_violation;
};

// Admissibility of a selection: |S||T| < (beta1/alpha2) * M(A*,B)^{-2}.
// Returns the partially filled constants (C_ST unset).
GJConstants gj_admissible(const Frame& a, const Frame& b,
                          const SubsetSelection& sel, const Tolerance& tol = {});

// Full constant evaluation; throws Inadmissible when the selection fails
// the threshold test. C(S,T) > 0 holds exactly on admissible selections.
GJConstants gj_constant(const Frame& a, const Frame& b,
                        const SubsetSelection& sel, const Tolerance& tol = {});

// Samples unit states (alternating complex/real Gaussian) and records the
// worst ratio of the two sides. Violations beyond a 1e-9 slack are data,
// not errors.
GJVerification verify_gj(const Frame& a, const Frame& b,
                         const SubsetSelection& sel, int trials,
                         std::uint64_t seed, const Tolerance& tol = {});

}  // namespace incompat

#include "incompat/gj_bound.hpp"

#include <cmath>

#include "incompat/spark.hpp"

namespace incompat {

GJConstants gj_admissible(const Frame& a, const Frame& b,
                          const SubsetSelection& sel, const Tolerance& tol) {
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimensionMismatch, "gj: frame dimensions differ");
  }
  if (sel.m != a.size() || sel.n != b.size()) {
    fail(ErrorCode::InvalidInput, "gj: selection sizes do not match the frames");
  }
  sel.validate();

  const FrameBounds ba = frame_bounds(a, tol);
  const FrameBounds bb = frame_bounds(b, tol);
  const Frame dual = canonical_dual(a, tol);

  GJConstants c;
  c.alpha1 = ba.lower;
  c.beta1 = ba.upper;
  c.alpha2 = bb.lower;
  c.beta2 = bb.upper;
  c.M_dualA_B = mutual_coherence(dual, b);
  // All index pairs, including k = j.
  c.M_dualA_A = mutual_coherence(dual, a);
  c.m = a.size();
  c.threshold = (c.beta1 / c.alpha2) / (c.M_dualA_B * c.M_dualA_B);
  c.admissible =
      static_cast<double>(sel.S.size()) * static_cast<double>(sel.T.size()) <
      c.threshold;
  return c;
}

GJConstants gj_constant(const Frame& a, const Frame& b,
                        const SubsetSelection& sel, const Tolerance& tol) {
  GJConstants c = gj_admissible(a, b, sel, tol);
  if (!c.admissible) {
    fail(ErrorCode::Inadmissible, "gj_constant: |S||T| >= admissibility threshold");
  }
  const double st = static_cast<double>(sel.S.size()) *
                    static_cast<double>(sel.T.size());
  const double numerator =
      1.0 - std::sqrt(c.alpha2 / c.beta1) * c.M_dualA_B * std::sqrt(st);
  const double denominator =
      std::max(1.0 / std::sqrt(c.beta1),
               (1.0 + std::sqrt(c.beta2 / c.beta1)) / std::sqrt(c.alpha1) *
                   static_cast<double>(c.m) * c.M_dualA_A);
  c.C_ST = numerator / denominator;
  return c;
}

GJVerification verify_gj(const Frame& a, const Frame& b,
                         const SubsetSelection& sel, int trials,
                         std::uint64_t seed, const Tolerance& tol) {
  GJVerification v;
  v.constants = gj_constant(a, b, sel, tol);
  v.trials = trials;
  v.min_ratio = std::numeric_limits<double>::infinity();

  const IndexSet sc = sel.s_complement();
  const IndexSet tc = sel.t_complement();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const CVector x = random_unit_state(a.dim(), rng, /*real_only=*/t % 2 == 1);
    double mass_a = 0.0, mass_b = 0.0;
    for (int k : sc) mass_a += std::norm(a.vector(k - 1).dot(x));
    for (int j : tc) mass_b += std::norm(b.vector(j - 1).dot(x));
    const double rhs = std::sqrt(mass_a) + std::sqrt(mass_b);
    const double lhs = v.constants.C_ST;  // |x| = 1
    if (lhs > 0.0) v.min_ratio = std::min(v.min_ratio, rhs / lhs);
    if (lhs > rhs + 1e-9 && !v.first_violation) {
      v.first_violation = GJViolation{t, x, lhs, rhs};
    }
  }
  v.pass = !v.first_violation.has_value();
  return v;
}

}  // namespace incompat

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "incompat/linalg.hpp"

namespace incompat {

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool tight = false;
  std::optional<double> tight_constant;
};

// Relative eigenvalue spread below which a frame counts as tight.
inline constexpr double kTightTol = 1e-9;

// Max-norm residual allowed on the sum of POVM effects.
inline constexpr double kPovmResidualTol = 1e-10;

// An ordered family of nonzero vectors in C^d. Vectors need not be
// normalized or orthogonal. Immutable after construction; the frame
// operator sum v_k v_k* is cached at construction time.
class Frame {
 public:
  Frame(int dim, std::vector<CVector> vectors, std::string label,
        const Tolerance& tol = {});

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  const std::vector<CVector>& vectors() const { return vectors_; }
  const CVector& vector(int k) const { return vectors_.at(k); }
  const std::string& label() const { return label_; }
  const CMatrix& frame_operator() const { return operator_; }

  // Frame vectors as the columns of a dim x size matrix.
  CMatrix as_columns() const;

 private:
  int dim_;
  std::vector<CVector> vectors_;
  std::string label_;
  CMatrix operator_;
};

// Rank-one POVM stored through its measurement vectors mu_i; the effects
// are the outer products mu_i mu_i* and must sum to the identity.
class Povm {
 public:
  Povm(int dim, std::vector<CVector> measurement_vectors);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  const std::vector<CVector>& measurement_vectors() const { return vectors_; }

  // max-norm of (sum_i mu_i mu_i*) - I.
  double identity_residual() const;

 private:
  int dim_;
  std::vector<CVector> vectors_;
};

// Extreme eigenvalues of the frame operator; NotAFrame when the vectors do
// not span C^d. tight_constant is the mean of the bounds when tight.
FrameBounds frame_bounds(const Frame& f, const Tolerance& tol = {});

// Vectors S^{-1} v_k, the canonical dual. Requires a spanning frame.
Frame canonical_dual(const Frame& f, const Tolerance& tol = {});

// Scale a tight frame with constant c to the measurement vectors v_k / sqrt(c)
// of a rank-one POVM. Throws NotTight otherwise.
Povm to_povm(const Frame& f, const Tolerance& tol = {});

// Born probabilities |<mu_i, state>|^2 for a unit-norm pure state.
std::vector<double> measurement_probabilities(const Povm& p, const CVector& state);

// Number of frame vectors with |<v_k, x>| > support_tol * |v_k| * |x|.
int support_count(const Frame& f, const CVector& x, const Tolerance& tol = {});

// n vectors in C^d whose frame operator is the identity: the columns of the
// first d rows of a Haar-distributed n x n unitary. Deterministic in seed.
Frame random_parseval_frame(int dim, int n, std::uint64_t seed,
                            std::string label = "parseval");

// Seeded complex Gaussian unit vector (used by the verification harnesses).
CVector random_unit_state(int dim, std::mt19937_64& rng, bool real_only = false);

}  // namespace incompat

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "incompat/linalg.hpp"
#include "test_util.hpp"

using namespace incompat;
using testutil::vec2;

TEST_CASE("numerical_rank on fixed matrices") {
  CHECK(numerical_rank(CMatrix::Identity(2, 2)) == 2);
  CHECK(numerical_rank(CMatrix::Zero(2, 2)) == 0);

  CMatrix m(2, 3);
  m.col(0) = vec2(1, 0);
  m.col(1) = vec2(0, 1);
  m.col(2) = vec2(0, std::sqrt(2.0) / 2.0);
  CHECK(numerical_rank(m) == 2);

  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(numerical_rank(bad), Error);
}

TEST_CASE("numerical_rank is scale invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = testutil::random_matrix(3, 5, rng);
    CHECK(numerical_rank(m) == numerical_rank(CMatrix(1e-7 * m)));
    CHECK(numerical_rank(m) == numerical_rank(CMatrix(1e7 * m)));
  }
}

TEST_CASE("rank of constructed low-rank products") {
  std::mt19937_64 rng(11);
  for (int r = 1; r <= 3; ++r) {
    const CMatrix left = testutil::random_matrix(4, r, rng);
    const CMatrix right = testutil::random_matrix(r, 6, rng);
    const CMatrix m = left * right;
    CHECK(numerical_rank(m) == r);
    CHECK(numerical_rank(CMatrix(m.adjoint())) == r);
    CMatrix doubled(4, 12);
    doubled << m, m;
    CHECK(numerical_rank(doubled) == r);
  }
}

TEST_CASE("nullspace_basis on fixed matrices") {
  CHECK(nullspace_basis(CMatrix::Identity(2, 2)).cols() == 0);

  CMatrix row(1, 2);
  row << Complex(1, 0), Complex(1, 0);
  const CMatrix basis = nullspace_basis(row);
  REQUIRE(basis.cols() == 1);
  CHECK(std::abs(basis.col(0).norm() - 1.0) < 1e-12);
  // proportional to (1, -1)/sqrt(2)
  CHECK(std::abs(basis(0, 0) + basis(1, 0)) < 1e-12);

  // first two vectors of a 2-d example, stacked as adjoint rows: full rank
  const double r3 = std::sqrt(3.0);
  CMatrix rows(2, 2);
  rows.row(0) = vec2(2 * r3, 1).adjoint();
  rows.row(1) = vec2(-2, -r3).adjoint();
  CHECK(nullspace_basis(rows).cols() == 0);
}

TEST_CASE("nullspace dimension and residual") {
  std::mt19937_64 rng(23);
  const Tolerance tol;
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 1 + int(rng() % 5);
    const int cols = 1 + int(rng() % 6);
    const CMatrix m = testutil::random_matrix(rows, cols, rng);
    const CMatrix basis = nullspace_basis(m, tol);
    CHECK(numerical_rank(m, tol) + basis.cols() == cols);
    if (basis.cols() > 0) {
      // columns orthonormal
      const CMatrix gram = basis.adjoint() * basis;
      CHECK((gram - CMatrix::Identity(basis.cols(), basis.cols())).norm() < 1e-10);
      Eigen::JacobiSVD<CMatrix> svd(m);
      const double sigma_max = svd.singularValues()(0);
      for (Eigen::Index j = 0; j < basis.cols(); ++j) {
        CHECK((m * basis.col(j)).norm() <= 10 * tol.rel_rank_tol * sigma_max);
      }
    }
  }
}

TEST_CASE("hermitian_eigenvalues") {
  const std::vector<double> id = hermitian_eigenvalues(CMatrix::Identity(2, 2));
  CHECK(id[0] == doctest::Approx(1.0));
  CHECK(id[1] == doctest::Approx(1.0));

  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 1.5;
  const std::vector<double> dv = hermitian_eigenvalues(diag);
  CHECK(dv[0] == doctest::Approx(1.0));
  CHECK(dv[1] == doctest::Approx(1.5));

  const double off = 4.0 * std::sqrt(3.0);
  CMatrix s(2, 2);
  s << 16.0, off, off, 16.0;
  const auto [lo, hi] = testutil::eig2_oracle(16.0, 16.0, Complex(off, 0.0));
  const std::vector<double> ev = hermitian_eigenvalues(s);
  CHECK(ev[0] == doctest::Approx(lo).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(hi).epsilon(1e-12));
  CHECK(ev[0] == doctest::Approx(9.071796769724491).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(22.928203230275509).epsilon(1e-12));

  CMatrix not_herm(2, 2);
  not_herm << 1.0, 2.0, 3.0, 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(not_herm), Error);
  CHECK_THROWS_AS(hermitian_eigenvalues(CMatrix::Zero(2, 3)), Error);
}

TEST_CASE("hermitian_eigenvalues matches 2x2 oracle on random input") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = gauss(rng), b = gauss(rng);
    const Complex c(gauss(rng), gauss(rng));
    CMatrix h(2, 2);
    h << a, c, std::conj(c), b;
    const auto [lo, hi] = testutil::eig2_oracle(a, b, c);
    const std::vector<double> ev = hermitian_eigenvalues(h);
    CHECK(ev[0] == doctest::Approx(lo).epsilon(1e-10));
    CHECK(ev[1] == doctest::Approx(hi).epsilon(1e-10));
  }
}

TEST_CASE("span_intersection_dim") {
  CMatrix e1(2, 1), e2(2, 1), b1(2, 1);
  e1.col(0) = vec2(1, 0);
  e2.col(0) = vec2(0, 1);
  b1.col(0) = vec2(0, std::sqrt(2.0) / 2.0);
  CHECK(span_intersection_dim(e1, e2) == 0);
  CHECK(span_intersection_dim(e1, e1) == 1);
  CHECK(span_intersection_dim(e2, b1) == 1);

  CMatrix wrong(3, 1);
  wrong.setZero();
  wrong(0, 0) = 1.0;
  CHECK_THROWS_AS(span_intersection_dim(e1, wrong), Error);
}

TEST_CASE("span_intersection_dim symmetry and bound") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = testutil::random_matrix(4, 1 + int(rng() % 4), rng);
    const CMatrix v = testutil::random_matrix(4, 1 + int(rng() % 4), rng);
    const int uv = span_intersection_dim(u, v);
    CHECK(uv == span_intersection_dim(v, u));
    CHECK(uv <= std::min(numerical_rank(u), numerical_rank(v)));
    CHECK(uv >= 0);
  }
}

TEST_CASE("frame-operator style matrices have nonnegative spectrum") {
  std::mt19937_64 rng(43);
  const Tolerance tol;
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix v = testutil::random_matrix(3, 5, rng);
    const CMatrix op = v * v.adjoint();
    const std::vector<double> ev = hermitian_eigenvalues(op, tol);
    for (double lambda : ev) {
      CHECK(lambda >= -10 * tol.rel_rank_tol * std::abs(ev.back()));
    }
  }
}

TEST_CASE("tolerance validation") {
  Tolerance bad;
  bad.rel_rank_tol = -1.0;
  CHECK_THROWS_AS(numerical_rank(CMatrix::Identity(2, 2), bad), Error);
  bad.rel_rank_tol = 1.5;
  CHECK_THROWS_AS(numerical_rank(CMatrix::Identity(2, 2), bad), Error);
}

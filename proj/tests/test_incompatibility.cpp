#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "incompat/incompatibility.hpp"
#include "test_util.hpp"

using namespace incompat;
using testutil::vec2;

namespace {

CMatrix concat(const Frame& a, const Frame& b) {
  CMatrix m(a.dim(), a.size() + b.size());
  m << a.as_columns(), b.as_columns();
  return m;
}

Frame identity2() { return Frame(2, {vec2(1, 0), vec2(0, 1)}, "I2"); }

Frame fourier(int d) {
  std::vector<CVector> vs;
  for (int j = 0; j < d; ++j) {
    CVector f(d);
    for (int k = 0; k < d; ++k) {
      const double phase = 2.0 * M_PI * j * k / d;
      f(k) = Complex(std::cos(phase), std::sin(phase)) / std::sqrt(double(d));
    }
    vs.push_back(std::move(f));
  }
  return Frame(d, std::move(vs), "F" + std::to_string(d));
}

Frame identity_basis(int d) {
  std::vector<CVector> vs;
  for (int k = 0; k < d; ++k) {
    CVector e = CVector::Zero(d);
    e(k) = 1.0;
    vs.push_back(std::move(e));
  }
  return Frame(d, std::move(vs), "I" + std::to_string(d));
}

}  // namespace

TEST_CASE("order of the worked example pair") {
  const IncompatibilityResult r =
      incompatibility_order(testutil::ex3_a(), testutil::ex3_b());
  CHECK(r.order == 3);
  CHECK(r.method == Method::SubsetRank);
  CHECK(r.witness_subsets.S == IndexSet{1});
  CHECK(r.witness_subsets.T == IndexSet{2, 3});
  CHECK((r.witness_state - vec2(1, 0)).norm() < 1e-12);
}

TEST_CASE("support oracle on the worked example pair") {
  const IncompatibilityResult r =
      min_support_sum(testutil::ex3_a(), testutil::ex3_b());
  CHECK(r.order == 3);
  CHECK(r.method == Method::SupportOracle);
  CHECK((r.witness_state - vec2(1, 0)).norm() < 1e-12);
  CHECK(r.witness_subsets.S == IndexSet{1});
  CHECK(r.witness_subsets.T == IndexSet{2, 3});
}

TEST_CASE("identity basis against itself") {
  const IncompatibilityResult r = incompatibility_order(identity2(), identity2());
  CHECK(r.order == 2);
  CHECK(r.witness_subsets.S == IndexSet{1});
  CHECK(r.witness_subsets.T == IndexSet{1});
  CHECK((r.witness_state - vec2(1, 0)).norm() < 1e-12);
  CHECK(min_support_sum(identity2(), identity2()).order == 2);
}

TEST_CASE("identity against fourier is completely incompatible") {
  for (int d : {2, 3}) {
    const Frame id = identity_basis(d);
    const Frame fr = fourier(d);
    const IncompatibilityResult rank_engine = incompatibility_order(id, fr);
    const IncompatibilityResult oracle = min_support_sum(id, fr);
    CHECK(rank_engine.order == d + 1);
    CHECK(oracle.order == d + 1);
    const SparkResult sp = spark(concat(id, fr));
    CHECK(*sp.value == d + 1);
  }
}

TEST_CASE("non-tight frames are rejected by the gated engine only") {
  const Frame a = testutil::expli_a();
  const Frame b = testutil::expli_b();
  CHECK_THROWS_AS(incompatibility_order(a, b), Error);

  const IncompatibilityResult oracle = min_support_sum(a, b);
  CHECK(oracle.order == 5);
  const CVector expected = vec2(1, -1) / std::sqrt(2.0);
  CHECK((oracle.witness_state - expected).norm() < 1e-10);
  CHECK(oracle.witness_subsets.S == IndexSet{1, 2, 3});
  CHECK(oracle.witness_subsets.T == IndexSet{3, 4});

  const IncompatibilityResult ungated = annihilation_order(a, b);
  CHECK(ungated.order == 5);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(annihilation_order(identity2(), identity_basis(3)), Error);
  CHECK_THROWS_AS(min_support_sum(identity2(), identity_basis(3)), Error);
}

TEST_CASE("minimal reconstruction number on fixed pairs") {
  const ReconstructionResult id2 =
      minimal_reconstruction_number(identity2(), identity2());
  CHECK(id2.t_min == 2);
  CHECK(id2.max_nonspanning.S == IndexSet{1});
  CHECK(id2.max_nonspanning.T == IndexSet{1});

  const ReconstructionResult ex3 =
      minimal_reconstruction_number(testutil::ex3_a(), testutil::ex3_b());
  CHECK(ex3.t_min == 2);
  CHECK(ex3.max_nonspanning.S == IndexSet{2});
  CHECK(ex3.max_nonspanning.T == IndexSet{1});

  const ReconstructionResult id3 =
      minimal_reconstruction_number(identity_basis(3), identity_basis(3));
  CHECK(id3.t_min == 4);

  const ReconstructionResult idf =
      minimal_reconstruction_number(identity2(), fourier(2));
  CHECK(idf.t_min == 1);
}

TEST_CASE("combined lower frame bound") {
  const Frame a = testutil::ex3_a();
  const Frame b = testutil::ex3_b();

  SubsetSelection empty{{}, {}, 2, 3};
  CHECK(combined_lower_frame_bound(a, b, empty) == doctest::Approx(2.0));

  SubsetSelection ones{{1}, {1}, 2, 3};
  // remaining operator is diag(1, 3/2)
  CHECK(combined_lower_frame_bound(a, b, ones) == doctest::Approx(1.0));

  SubsetSelection sel12{{1}, {2}, 2, 3};
  const auto [lo, hi] = testutil::eig2_oracle(
      0.5, 1.75, Complex(-std::sqrt(2.0) / 4.0, 0.0));
  CHECK(combined_lower_frame_bound(a, b, sel12) ==
        doctest::Approx(lo).epsilon(1e-12));

  SubsetSelection id_sel{{1}, {}, 2, 2};
  CHECK(combined_lower_frame_bound(identity2(), identity2(), id_sel) ==
        doctest::Approx(1.0));

  // removing everything leaves nothing to span
  SubsetSelection all{{1, 2}, {1, 2, 3}, 2, 3};
  CHECK_THROWS_AS(combined_lower_frame_bound(a, b, all), Error);
}

TEST_CASE("uncertainty constants of the worked example") {
  const UncertaintyConstants uc =
      uncertainty_constants(testutil::ex3_a(), testutil::ex3_b());
  CHECK(uc.alpha == doctest::Approx(1.0));
  CHECK(uc.beta == doctest::Approx(1.0));
  CHECK(uc.order == 3);
  // all (S, T) with |S| + |T| < 3, empty sets included
  CHECK(uc.entries.size() == 16);

  // the minimum sits at S={1}, T={2} (and its mirror T={3})
  const auto [lo, hi] = testutil::eig2_oracle(
      0.5, 1.75, Complex(-std::sqrt(2.0) / 4.0, 0.0));
  CHECK(uc.C_s == doctest::Approx(lo).epsilon(1e-12));
  CHECK(uc.C == doctest::Approx(1.0 / lo).epsilon(1e-12));

  double observed_min = 1e300;
  for (const UncertaintyConstantEntry& e : uc.entries) {
    observed_min = std::min(observed_min, e.value);
  }
  CHECK(uc.C_s == doctest::Approx(observed_min));
}

TEST_CASE("uncertainty constants of the identity pair") {
  const UncertaintyConstants uc = uncertainty_constants(identity2(), identity2());
  CHECK(uc.order == 2);
  CHECK(uc.entries.size() == 5);  // empty pair + four singletons
  CHECK(uc.C_s == doctest::Approx(1.0));
  CHECK(uc.C == doctest::Approx(1.0));

  CHECK_THROWS_AS(uncertainty_constants(testutil::expli_a(), testutil::expli_b()),
                  Error);
}

TEST_CASE("norm inequality holds with the computed constant") {
  std::mt19937_64 rng(77);
  const Frame a = testutil::ex3_a();
  const Frame b = testutil::ex3_b();
  const UncertaintyConstants uc = uncertainty_constants(a, b);
  for (const UncertaintyConstantEntry& e : uc.entries) {
    const IndexSet sc = e.selection.s_complement();
    const IndexSet tc = e.selection.t_complement();
    for (int trial = 0; trial < 200; ++trial) {
      const CVector x = random_unit_state(2, rng);
      double mass = 0.0;
      for (int k : sc) mass += std::norm(a.vector(k - 1).dot(x));
      for (int j : tc) mass += std::norm(b.vector(j - 1).dot(x));
      CHECK(1.0 <= uc.C * mass + 1e-9);
    }
  }
}

TEST_CASE("support uncertainty sampling harness") {
  const IncompatibilityResult r =
      incompatibility_order(testutil::ex3_a(), testutil::ex3_b());
  const SupportUncertaintyReport rep =
      verify_support_uncertainty(testutil::ex3_a(), testutil::ex3_b(), r, 1000, 5);
  CHECK(rep.pass);
  CHECK(rep.min_observed >= 3);
  CHECK(rep.witness_attains);
  CHECK_FALSE(rep.first_counterexample.has_value());

  const IncompatibilityResult rid = incompatibility_order(identity2(), identity2());
  CHECK(verify_support_uncertainty(identity2(), identity2(), rid, 500, 6).pass);

  const Frame id3 = identity_basis(3);
  const Frame f3 = fourier(3);
  const IncompatibilityResult rf = incompatibility_order(id3, f3);
  const SupportUncertaintyReport rep3 =
      verify_support_uncertainty(id3, f3, rf, 1000, 7);
  CHECK(rep3.pass);
  CHECK(rep3.min_observed >= 4);

  // an inflated order must be flagged
  IncompatibilityResult wrong = rf;
  wrong.order = 7;  // more than m + n = 6 is unattainable
  const SupportUncertaintyReport bad =
      verify_support_uncertainty(id3, f3, wrong, 50, 8);
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_counterexample.has_value());
}

TEST_CASE("orthonormal pairs: order equals the spark of the concatenation") {
  int cases = 0;
  for (int d = 2; d <= 5; ++d) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Frame a = random_parseval_frame(d, d, 3000 + 17 * seed + d);
      const Frame b = random_parseval_frame(d, d, 4000 + 19 * seed + d);
      const IncompatibilityResult r = incompatibility_order(a, b);
      const SparkResult sp = spark(concat(a, b));
      REQUIRE_FALSE(sp.infinite());
      CHECK(r.order == *sp.value);
      ++cases;
    }
  }
  CHECK(cases == 24);
}

TEST_CASE("random tight pairs: engine agreement, spark bound, reconstruction") {
  std::mt19937_64 pick(55);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + int(pick() % 3);
    const int m = d + int(pick() % (7 - d));
    const int n = d + int(pick() % (7 - d));
    const Frame a = random_parseval_frame(d, m, 5000 + std::uint64_t(trial));
    const Frame b = random_parseval_frame(d, n, 6000 + std::uint64_t(trial));

    const IncompatibilityResult rank_engine = incompatibility_order(a, b);
    const IncompatibilityResult oracle = min_support_sum(a, b);
    CHECK(rank_engine.order == oracle.order);

    const SparkResult sp = spark(concat(a, b));
    CHECK(rank_engine.order >= *sp.value);

    const ReconstructionResult rec = minimal_reconstruction_number(a, b);
    CHECK(rank_engine.order + rec.t_min == m + n);

    // witness concentration matches the reported subsets
    CHECK(support_count(a, rank_engine.witness_state) <=
          int(rank_engine.witness_subsets.S.size()));
    CHECK(support_count(b, rank_engine.witness_state) <=
          int(rank_engine.witness_subsets.T.size()));
  }
}

TEST_CASE("orthonormal pairs: order matches the span-intersection definition") {
  // Third route, straight from the subset definition: the smallest
  // |S| + |T| over nonempty subsets whose spans intersect nontrivially.
  for (int d = 2; d <= 3; ++d) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Frame a = random_parseval_frame(d, d, 7000 + 10 * seed + std::uint64_t(d));
      const Frame b = random_parseval_frame(d, d, 8000 + 10 * seed + std::uint64_t(d));
      int smallest = d + 2;
      for (int smask = 1; smask < (1 << d); ++smask) {
        for (int tmask = 1; tmask < (1 << d); ++tmask) {
          const int total = __builtin_popcount(unsigned(smask)) +
                            __builtin_popcount(unsigned(tmask));
          if (total >= smallest) continue;
          CMatrix u(d, __builtin_popcount(unsigned(smask)));
          CMatrix v(d, __builtin_popcount(unsigned(tmask)));
          int cu = 0, cv = 0;
          for (int k = 0; k < d; ++k) {
            if (smask & (1 << k)) u.col(cu++) = a.vector(k);
            if (tmask & (1 << k)) v.col(cv++) = b.vector(k);
          }
          if (span_intersection_dim(u, v) > 0) smallest = total;
        }
      }
      CHECK(smallest == incompatibility_order(a, b).order);
    }
  }
}

TEST_CASE("order is invariant under frame rescaling") {
  const Frame a = testutil::ex3_a();
  const Frame b = testutil::ex3_b();
  std::vector<CVector> scaled;
  for (const CVector& v : a.vectors()) scaled.push_back(0.7 * v);
  const Frame a_scaled(2, std::move(scaled), "cA");
  CHECK(incompatibility_order(a_scaled, b).order ==
        incompatibility_order(a, b).order);
}

TEST_CASE("witness state is canonical") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 10; ++trial) {
    const Frame a = random_parseval_frame(3, 4, 70 + std::uint64_t(trial));
    const Frame b = random_parseval_frame(3, 5, 80 + std::uint64_t(trial));
    const IncompatibilityResult r = incompatibility_order(a, b);
    CHECK(std::abs(r.witness_state.norm() - 1.0) < 1e-12);
    for (Eigen::Index i = 0; i < r.witness_state.size(); ++i) {
      const Complex c = r.witness_state(i);
      if (std::abs(c) > 1e-9) {
        CHECK(std::abs(c.imag()) < 1e-12);
        CHECK(c.real() > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("budget guard on the engines") {
  Budget small;
  small.max_dim = 1;
  CHECK_THROWS_AS(annihilation_order(identity2(), identity2(), Tolerance{}, small),
                  Error);
  small.force = true;
  CHECK_NOTHROW(annihilation_order(identity2(), identity2(), Tolerance{}, small));
}

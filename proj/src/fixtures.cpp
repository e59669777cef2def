#include "incompat/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace incompat::fixtures {

namespace {

CVector vec2(double x0, double x1) {
  CVector v(2);
  v << Complex(x0, 0.0), Complex(x1, 0.0);
  return v;
}

Frame make_ex3_a() {
  return Frame(2, {vec2(1, 0), vec2(0, 1)}, "paper-ex3-A");
}

Frame make_ex3_b() {
  const double h = std::sqrt(2.0) / 2.0;
  return Frame(2, {vec2(0, h), vec2(h, 0.5), vec2(h, -0.5)}, "paper-ex3-B");
}

Frame make_expli_a() {
  const double r3 = std::sqrt(3.0);
  return Frame(2, {vec2(2 * r3, 1), vec2(-2, -r3), vec2(0, 2 * r3)},
               "paper-expli-A");
}

Frame make_expli_b() {
  const double r3 = std::sqrt(3.0);
  const double t = std::sqrt(2 * r3 - 1.25);
  return Frame(2,
               {vec2(1, 1), vec2(0.5, 0.5), vec2(0, 1), vec2(2, -r3),
                vec2(-t, -t)},
               "paper-expli-B");
}

Frame make_expli_c() {
  const double r3 = std::sqrt(3.0);
  const double q = 2 * std::pow(3.0, 0.25);
  return Frame(2, {vec2(2, -r3), vec2(q, q), vec2(-2, r3), vec2(0, -std::sqrt(2.0))},
               "paper-expli-C");
}

std::string pair_key(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return a + "|" + b;
}

}  // namespace

const std::vector<std::string>& bundled_kinds() {
  static const std::vector<std::string> kinds = {
      "paper-ex3-A", "paper-ex3-B", "paper-expli-A", "paper-expli-B",
      "paper-expli-C"};
  return kinds;
}

bool is_bundled_kind(const std::string& kind) {
  const auto& kinds = bundled_kinds();
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

Frame bundled(const std::string& kind) {
  if (kind == "paper-ex3-A") return make_ex3_a();
  if (kind == "paper-ex3-B") return make_ex3_b();
  if (kind == "paper-expli-A") return make_expli_a();
  if (kind == "paper-expli-B") return make_expli_b();
  if (kind == "paper-expli-C") return make_expli_c();
  fail(ErrorCode::InvalidInput, "unknown bundled frame kind '" + kind + "'");
}

Frame orthonormal_basis(int dim, std::string label) {
  if (dim < 1) fail(ErrorCode::InvalidShape, "orthonormal_basis: dim >= 1");
  std::vector<CVector> vectors;
  vectors.reserve(std::size_t(dim));
  for (int k = 0; k < dim; ++k) {
    CVector e = CVector::Zero(dim);
    e(k) = Complex(1.0, 0.0);
    vectors.push_back(std::move(e));
  }
  return Frame(dim, std::move(vectors), std::move(label));
}

Frame fourier_basis(int dim, std::string label) {
  if (dim < 1) fail(ErrorCode::InvalidShape, "fourier_basis: dim >= 1");
  const double scale = 1.0 / std::sqrt(double(dim));
  std::vector<CVector> vectors;
  vectors.reserve(std::size_t(dim));
  for (int j = 0; j < dim; ++j) {
    CVector f(dim);
    for (int k = 0; k < dim; ++k) {
      const double phase = 2.0 * std::numbers::pi * double(j) * double(k) / double(dim);
      f(k) = scale * Complex(std::cos(phase), std::sin(phase));
    }
    vectors.push_back(std::move(f));
  }
  return Frame(dim, std::move(vectors), std::move(label));
}

std::optional<int> published_pair_order(const std::string& label_a,
                                        const std::string& label_b) {
  const std::string key = pair_key(label_a, label_b);
  if (key == pair_key("paper-ex3-A", "paper-ex3-B")) return 3;
  if (key == pair_key("paper-expli-A", "paper-expli-B")) return 5;
  if (key == pair_key("paper-expli-B", "paper-expli-C")) return 5;
  if (key == pair_key("paper-expli-A", "paper-expli-C")) return 4;
  return std::nullopt;
}

std::optional<int> published_pair_spark(const std::string& label_a,
                                        const std::string& label_b) {
  if (pair_key(label_a, label_b) == pair_key("paper-ex3-A", "paper-ex3-B")) {
    return 2;
  }
  return std::nullopt;
}

std::optional<int> published_multi_order(const std::vector<std::string>& labels) {
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  const std::vector<std::string> expli = {"paper-expli-A", "paper-expli-B",
                                          "paper-expli-C"};
  if (sorted == expli) return 8;
  return std::nullopt;
}

}  // namespace incompat::fixtures

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incompat/frame.hpp"

namespace incompat::fixtures {

// Bundled example frames, addressable by the generator kind names used by
// the CLI. The paper-* kinds reproduce worked examples from the published
// literature on frame incompatibility; their vectors are emitted verbatim.
Frame bundled(const std::string& kind);
const std::vector<std::string>& bundled_kinds();
bool is_bundled_kind(const std::string& kind);

Frame orthonormal_basis(int dim, std::string label = "orthonormal");

// Unitary DFT basis: column j has entries exp(2*pi*i*j*k/d)/sqrt(d).
Frame fourier_basis(int dim, std::string label = "fourier");

// Published values attached to the bundled examples, looked up by frame
// labels. Analyses over these labels compare computed results against the
// published ones and report mismatches as discrepancies.
std::optional<int> published_pair_order(const std::string& label_a,
                                        const std::string& label_b);
std::optional<int> published_pair_spark(const std::string& label_a,
                                        const std::string& label_b);
std::optional<int> published_multi_order(const std::vector<std::string>& labels);

}  // namespace incompat::fixtures

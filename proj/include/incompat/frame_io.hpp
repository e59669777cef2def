#pragma once

#include <string>

#include "incompat/frame.hpp"

namespace incompat {

// Frame file format: a JSON object
//   {"label": str, "dim": d, "vectors": [[[re, im], ...], ...]}
// with one [re, im] pair per coordinate. Reals may use decimal or
// scientific notation. Files are written with 17 significant digits so
// every double round-trips exactly.

Frame parse_frame_json(const std::string& text, const Tolerance& tol = {});
Frame read_frame_file(const std::string& path, const Tolerance& tol = {});

std::string frame_to_json(const Frame& f);
void write_frame_file(const std::string& path, const Frame& f);

}  // namespace incompat

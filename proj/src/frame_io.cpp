#include "incompat/frame_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace incompat {

namespace {

using nlohmann::json;

double number_at(const json& j, const char* what) {
  if (!j.is_number()) {
    fail(ErrorCode::ParseError, std::string("frame file: ") + what +
                                    " must be a number, got " + j.dump());
  }
  return j.get<double>();
}

}  // namespace

Frame parse_frame_json(const std::string& text, const Tolerance& tol) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("frame file: ") + e.what());
  }
  if (!root.is_object() || !root.contains("label") || !root.contains("dim") ||
      !root.contains("vectors")) {
    fail(ErrorCode::ParseError,
         "frame file: expected object with keys label, dim, vectors");
  }
  if (!root["label"].is_string() || !root["dim"].is_number_integer() ||
      !root["vectors"].is_array()) {
    fail(ErrorCode::ParseError, "frame file: bad field types");
  }
  const int dim = root["dim"].get<int>();
  if (dim < 1) fail(ErrorCode::ParseError, "frame file: dim must be >= 1");

  std::vector<CVector> vectors;
  for (const json& jv : root["vectors"]) {
    if (!jv.is_array() || int(jv.size()) != dim) {
      fail(ErrorCode::ParseError,
           "frame file: each vector needs exactly dim coordinate pairs");
    }
    CVector v(dim);
    for (int i = 0; i < dim; ++i) {
      const json& pair = jv[std::size_t(i)];
      if (!pair.is_array() || pair.size() != 2) {
        fail(ErrorCode::ParseError,
             "frame file: coordinates must be [re, im] pairs");
      }
      v(i) = Complex(number_at(pair[0], "re"), number_at(pair[1], "im"));
    }
    vectors.push_back(std::move(v));
  }
  try {
    return Frame(dim, std::move(vectors), root["label"].get<std::string>(), tol);
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, std::string("frame file: ") + e.what());
  }
}

Frame read_frame_file(const std::string& path, const Tolerance& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open frame file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_frame_json(buf.str(), tol);
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

std::string frame_to_json(const Frame& f) {
  auto real17 = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "{\n  \"label\": " << nlohmann::json(f.label()).dump()
      << ",\n  \"dim\": " << f.dim() << ",\n  \"vectors\": [\n";
  for (int k = 0; k < f.size(); ++k) {
    const CVector& v = f.vector(k);
    out << "    [";
    for (int i = 0; i < f.dim(); ++i) {
      if (i) out << ", ";
      out << "[" << real17(v(i).real()) << ", " << real17(v(i).imag()) << "]";
    }
    out << "]" << (k + 1 < f.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

void write_frame_file(const std::string& path, const Frame& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidInput, "cannot write frame file '" + path + "'");
  out << frame_to_json(f);
}

}  // namespace incompat

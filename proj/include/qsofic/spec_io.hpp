// Copyright 2026 The qsofic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSOFIC_SPEC_IO_HPP
#define QSOFIC_SPEC_IO_HPP

// Generator spec files (JSON):
//
//   {
//     "dimension": 3,
//     "alphabet": ["0", "1"],
//     "unitary": [[[re, im], ...], ...],          // dimension rows, row-major
//     "projectors": {
//       "0": {"basis": [1]},                      // 0-based basis states
//       "1": {"matrix": [[[re, im], ...], ...]}
//     },
//     "tolerance": 1e-9                           // optional
//   }
//
// Unknown fields are rejected. Only structure is checked here; unitarity and
// the projector algebra are checked by build_generator.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qsofic/generator.hpp"

namespace qsofic {

class SpecError : public std::runtime_error {
 public:
  SpecError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  /// JSON pointer of the offending field, or "line N, column M" for syntax errors.
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

namespace detail {

using nlohmann::json;

inline void reject_unknown_fields(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw SpecError(path + "/" + key, "unknown field");
}

inline std::size_t read_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw SpecError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

inline Complex read_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw SpecError(path, "expected a [re, im] pair of numbers");
  return {v[0].get<double>(), v[1].get<double>()};
}

inline ComplexMatrix read_matrix(const json& v, const std::string& path, std::size_t dim) {
  if (!v.is_array() || v.size() != dim)
    throw SpecError(path, "expected " + std::to_string(dim) + " rows, got " + (v.is_array() ? std::to_string(v.size()) : "non-array"));
  std::vector<Complex> flat;
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_path = path + "/" + std::to_string(i);
    const auto& row = v[i];
    if (!row.is_array() || row.size() != dim)
      throw SpecError(row_path, "expected " + std::to_string(dim) + " entries, got " +
                                    (row.is_array() ? std::to_string(row.size()) : "non-array"));
    for (std::size_t j = 0; j < dim; ++j) flat.push_back(read_complex(row[j], row_path + "/" + std::to_string(j)));
  }
  try {
    return ComplexMatrix(dim, std::move(flat));
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
}

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace detail

inline GeneratorSpec parse_spec(std::string_view text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SpecError(detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!doc.is_object()) throw SpecError("/", "expected an object");
  detail::reject_unknown_fields(doc, "", {"dimension", "alphabet", "unitary", "projectors", "tolerance"});
  for (const char* required : {"dimension", "alphabet", "unitary", "projectors"})
    if (!doc.contains(required)) throw SpecError(std::string("/") + required, "missing required field");

  GeneratorSpec spec;
  spec.dim = detail::read_count(doc["dimension"], "/dimension");
  if (spec.dim == 0) throw SpecError("/dimension", "must be positive");

  const auto& alphabet = doc["alphabet"];
  if (!alphabet.is_array() || alphabet.empty()) throw SpecError("/alphabet", "expected a non-empty array of strings");
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (!alphabet[i].is_string() || alphabet[i].get<std::string>().empty())
      throw SpecError("/alphabet/" + std::to_string(i), "expected a non-empty string");
    spec.alphabet.push_back(alphabet[i].get<std::string>());
  }

  spec.unitary = detail::read_matrix(doc["unitary"], "/unitary", spec.dim);

  const auto& projectors = doc["projectors"];
  if (!projectors.is_object()) throw SpecError("/projectors", "expected an object keyed by symbol");
  for (const auto& [symbol, def] : projectors.items()) {
    const std::string path = "/projectors/" + symbol;
    if (!def.is_object()) throw SpecError(path, "expected {\"basis\": [...]} or {\"matrix\": [...]}");
    detail::reject_unknown_fields(def, path, {"basis", "matrix"});
    if (def.contains("basis") == def.contains("matrix")) throw SpecError(path, "exactly one of basis or matrix is required");
    if (def.contains("basis")) {
      const auto& basis = def["basis"];
      if (!basis.is_array()) throw SpecError(path + "/basis", "expected an array of state indices");
      BasisSubset subset;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::string ipath = path + "/basis/" + std::to_string(i);
        const std::size_t index = detail::read_count(basis[i], ipath);
        if (index >= spec.dim)
          throw SpecError(ipath, "basis index " + std::to_string(index) + " out of range for dimension " + std::to_string(spec.dim));
        subset.indices.push_back(index);
      }
      spec.projectors.emplace_back(symbol, std::move(subset));
    } else {
      spec.projectors.emplace_back(symbol, detail::read_matrix(def["matrix"], path + "/matrix", spec.dim));
    }
  }

  if (doc.contains("tolerance")) {
    const auto& tol = doc["tolerance"];
    if (!tol.is_number() || !(tol.get<double>() > 0.0)) throw SpecError("/tolerance", "expected a positive number");
    spec.tolerance = tol.get<double>();
  }
  return spec;
}

inline GeneratorSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

namespace detail {

inline std::string format_exact(double v, int digits = 17) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string matrix_text(const ComplexMatrix& m, const std::string& indent) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += indent + "  [";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) out += ", ";
      out += "[" + format_exact(m(i, j).real()) + ", " + format_exact(m(i, j).imag()) + "]";
    }
    out += i + 1 < m.dim() ? "],\n" : "]\n";
  }
  return out + indent + "]";
}

}  // namespace detail

/// Serializes a spec in the file format above, numbers at 17 significant digits.
inline std::string spec_to_json_text(const GeneratorSpec& spec) {
  std::string out = "{\n  \"dimension\": " + std::to_string(spec.dim) + ",\n  \"alphabet\": [";
  for (std::size_t i = 0; i < spec.alphabet.size(); ++i)
    out += (i ? ", " : "") + nlohmann::json(spec.alphabet[i]).dump();
  out += "],\n  \"unitary\": " + detail::matrix_text(spec.unitary, "  ") + ",\n  \"projectors\": {\n";
  for (std::size_t k = 0; k < spec.projectors.size(); ++k) {
    const auto& [symbol, def] = spec.projectors[k];
    out += "    " + nlohmann::json(symbol).dump() + ": ";
    if (const auto* subset = std::get_if<BasisSubset>(&def)) {
      out += "{\"basis\": [";
      for (std::size_t i = 0; i < subset->indices.size(); ++i) out += (i ? ", " : "") + std::to_string(subset->indices[i]);
      out += "]}";
    } else {
      out += "{\"matrix\": " + detail::matrix_text(std::get<ComplexMatrix>(def), "    ") + "}";
    }
    out += k + 1 < spec.projectors.size() ? ",\n" : "\n";
  }
  out += "  },\n  \"tolerance\": " + detail::format_exact(spec.tolerance, 15) + "\n}\n";
  return out;
}

}  // namespace qsofic

#endif  // QSOFIC_SPEC_IO_HPP

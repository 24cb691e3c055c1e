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

#ifndef QSOFIC_REPORT_HPP
#define QSOFIC_REPORT_HPP

// Machine-readable output: CSV/JSON renderings of word distributions and
// plot-ready density rows.
//
// CSV schemas (one header line, 12 significant digits):
//   distribution: word,probability
//   plot:         word,x,log2_density      (log2_density is -inf for forbidden words)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsofic/language.hpp"

namespace qsofic {

/// Probabilities and densities are printed with %.12g.
inline std::string format_number(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct PlotRow {
  Word word;
  double x = 0.0;                       // 0.s_1 s_2 ... s_L in base 2
  std::optional<double> log2_density;   // empty for forbidden words
};

/// Longest word length for which plot rows (2^L of them) are produced.
inline constexpr std::size_t kMaxPlotLength = 24;

/// Every length-L binary word with x = 0.s^L and log2(Pr(s^L) 2^L), i.e. the
/// probability as a density on cells of width 2^-L. Sorted by x.
inline std::vector<PlotRow> emit_distribution_plot_data(const WordDistribution& d, std::size_t length,
                                                        double threshold = kZeroThreshold) {
  if (d.alphabet_size() != 2) throw std::invalid_argument("plot data requires a binary alphabet");
  if (length == 0 || length > d.max_length()) throw std::out_of_range("plot length out of range");
  if (length > kMaxPlotLength) throw std::out_of_range("plot length too large");
  std::vector<PlotRow> rows;
  const std::uint64_t count = std::uint64_t{1} << length;
  rows.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    PlotRow row;
    for (std::size_t i = 0; i < length; ++i) row.word.push_back((code >> (length - 1 - i)) & 1U);
    row.x = std::ldexp(static_cast<double>(code), -static_cast<int>(length));
    const double p = d.probability(row.word);
    if (p > threshold) row.log2_density = std::log2(p) + static_cast<double>(length);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string distribution_csv(const WordDistribution& d) {
  std::string out = "word,probability\n";
  for (std::size_t length = 1; length <= d.max_length(); ++length)
    for (const auto& [w, p] : d.at_length(length)) out += format_word(d.alphabet(), w) + "," + format_number(p) + "\n";
  return out;
}

inline nlohmann::json distribution_json(const WordDistribution& d) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t length = 1; length <= d.max_length(); ++length) {
    nlohmann::json words = nlohmann::json::array();
    for (const auto& [w, p] : d.at_length(length)) words.push_back({{"word", format_word(d.alphabet(), w)}, {"probability", p}});
    levels.push_back({{"length", length}, {"words", std::move(words)}});
  }
  return {{"alphabet", d.alphabet()}, {"max_length", d.max_length()}, {"lengths", std::move(levels)}};
}

inline std::string plot_csv(const std::vector<std::string>& alphabet, const std::vector<PlotRow>& rows) {
  std::string out = "word,x,log2_density\n";
  for (const auto& r : rows)
    out += format_word(alphabet, r.word) + "," + format_number(r.x) + "," +
           format_number(r.log2_density.value_or(-INFINITY)) + "\n";
  return out;
}

inline nlohmann::json plot_json(const std::vector<std::string>& alphabet, const std::vector<PlotRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"word", format_word(alphabet, r.word)}, {"x", r.x}};
    row["log2_density"] = r.log2_density ? nlohmann::json(*r.log2_density) : nlohmann::json(nullptr);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace qsofic

#endif  // QSOFIC_REPORT_HPP

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

#ifndef QSOFIC_GENERATOR_HPP
#define QSOFIC_GENERATOR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qsofic/linalg.hpp"

namespace qsofic {

/// Probabilities at or below this are treated as exactly zero.
inline constexpr double kZeroThreshold = 1e-12;

using SymbolIndex = std::size_t;
/// A measurement word as indices into the generator's alphabet.
using Word = std::vector<SymbolIndex>;

struct BasisSubset {
  std::vector<std::size_t> indices;
};

/// A projector is given either as a list of basis states or as an explicit matrix.
using ProjectorDef = std::variant<BasisSubset, ComplexMatrix>;

/// Unvalidated description of a generator, as read from a spec file.
struct GeneratorSpec {
  std::size_t dim = 0;
  std::vector<std::string> alphabet;
  ComplexMatrix unitary;
  std::vector<std::pair<std::string, ProjectorDef>> projectors;
  double tolerance = kDefaultTolerance;
};

enum class GeneratorErrorKind {
  DimensionMismatch,
  NotUnitary,
  InvalidProjectorFamily,
  AlphabetMismatch,
  DuplicateSymbol,
  BasisIndexOutOfRange,
  UnknownSymbol,
};

inline const char* to_string(GeneratorErrorKind k) {
  switch (k) {
    case GeneratorErrorKind::DimensionMismatch: return "dimension mismatch";
    case GeneratorErrorKind::NotUnitary: return "evolution operator is not unitary";
    case GeneratorErrorKind::InvalidProjectorFamily: return "invalid projector family";
    case GeneratorErrorKind::AlphabetMismatch: return "alphabet and projector symbols differ";
    case GeneratorErrorKind::DuplicateSymbol: return "duplicate symbol";
    case GeneratorErrorKind::BasisIndexOutOfRange: return "projector basis index out of range";
    case GeneratorErrorKind::UnknownSymbol: return "unknown symbol";
  }
  return "unknown error";
}

class GeneratorError : public std::runtime_error {
 public:
  GeneratorError(GeneratorErrorKind kind, const std::string& detail, ProjectorReport report = {})
      : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        kind_(kind),
        report_(std::move(report)) {}

  GeneratorErrorKind kind() const { return kind_; }
  /// Populated for InvalidProjectorFamily.
  const ProjectorReport& projector_report() const { return report_; }

 private:
  GeneratorErrorKind kind_;
  ProjectorReport report_;
};

namespace detail {

inline bool single_char_symbols(const std::vector<std::string>& alphabet) {
  return std::all_of(alphabet.begin(), alphabet.end(), [](const std::string& a) { return a.size() == 1; });
}

}  // namespace detail

/// Concatenates symbols; multi-character alphabets are joined with '|'.
inline std::string format_word(const std::vector<std::string>& alphabet, std::span<const SymbolIndex> w) {
  const bool compact = detail::single_char_symbols(alphabet);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += '|';
    out += alphabet.at(w[i]);
  }
  return out;
}

class QuantumGenerator;
QuantumGenerator build_generator(const GeneratorSpec& spec);

/// Quantum finite-state generator: unitary evolution U followed by a
/// projective measurement {P(s)}. Immutable once built.
class QuantumGenerator {
 public:
  std::size_t dim() const { return unitary_.dim(); }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& symbol(SymbolIndex s) const { return alphabet_.at(s); }
  const ComplexMatrix& unitary() const { return unitary_; }
  const ComplexMatrix& projector(SymbolIndex s) const { return projectors_.at(s); }
  std::span<const ComplexMatrix> projectors() const { return projectors_; }
  double tolerance() const { return tolerance_; }

  SymbolIndex symbol_index(std::string_view name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) throw GeneratorError(GeneratorErrorKind::UnknownSymbol, std::string(name));
    return static_cast<SymbolIndex>(it - alphabet_.begin());
  }

  /// T(s) = U·P(s).
  const ComplexMatrix& transition(SymbolIndex s) const {
    if (s >= transitions_.size()) throw GeneratorError(GeneratorErrorKind::UnknownSymbol, "index " + std::to_string(s));
    return transitions_[s];
  }

  /// True when every symbol is a single character, so words print without separators.
  bool single_char_symbols() const { return detail::single_char_symbols(alphabet_); }

  std::string format_word(std::span<const SymbolIndex> w) const { return qsofic::format_word(alphabet_, w); }

  /// Inverse of format_word.
  Word parse_word(std::string_view text) const {
    Word w;
    if (single_char_symbols()) {
      for (char c : text) w.push_back(symbol_index(std::string_view(&c, 1)));
      return w;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t bar = text.find('|', start);
      if (bar == std::string_view::npos) bar = text.size();
      w.push_back(symbol_index(text.substr(start, bar - start)));
      start = bar + 1;
    }
    return w;
  }

 private:
  friend QuantumGenerator build_generator(const GeneratorSpec& spec);
  QuantumGenerator() = default;

  std::vector<std::string> alphabet_;
  ComplexMatrix unitary_;
  std::vector<ComplexMatrix> projectors_;
  std::vector<ComplexMatrix> transitions_;
  double tolerance_ = kDefaultTolerance;
};

/// Validates a spec and expands basis-subset projectors to diagonal 0/1 matrices.
inline QuantumGenerator build_generator(const GeneratorSpec& spec) {
  using K = GeneratorErrorKind;
  if (spec.dim == 0) throw GeneratorError(K::DimensionMismatch, "dimension must be positive");
  if (spec.unitary.dim() != spec.dim)
    throw GeneratorError(K::DimensionMismatch, "unitary is " + std::to_string(spec.unitary.dim()) + "x" +
                                                   std::to_string(spec.unitary.dim()) + ", expected " +
                                                   std::to_string(spec.dim));
  if (!(spec.tolerance > 0.0)) throw GeneratorError(K::DimensionMismatch, "tolerance must be positive");

  std::set<std::string> seen;
  for (const auto& a : spec.alphabet)
    if (!seen.insert(a).second) throw GeneratorError(K::DuplicateSymbol, "alphabet symbol '" + a + "'");
  std::set<std::string> keys;
  for (const auto& [name, def] : spec.projectors)
    if (!keys.insert(name).second) throw GeneratorError(K::DuplicateSymbol, "projector symbol '" + name + "'");
  if (seen != keys || spec.alphabet.empty()) throw GeneratorError(K::AlphabetMismatch, "");

  if (auto u = is_unitary(spec.unitary, spec.tolerance); !u)
    throw GeneratorError(K::NotUnitary, "max deviation of U U^dagger from identity " + std::to_string(u.max_deviation));

  QuantumGenerator g;
  g.alphabet_ = spec.alphabet;
  g.unitary_ = spec.unitary;
  g.tolerance_ = spec.tolerance;
  for (const auto& a : spec.alphabet) {
    auto it = std::find_if(spec.projectors.begin(), spec.projectors.end(), [&](const auto& p) { return p.first == a; });
    const ProjectorDef& def = it->second;
    if (const auto* subset = std::get_if<BasisSubset>(&def)) {
      for (std::size_t i : subset->indices)
        if (i >= spec.dim)
          throw GeneratorError(K::BasisIndexOutOfRange, "symbol '" + a + "' index " + std::to_string(i));
      g.projectors_.push_back(ComplexMatrix::basis_projector(spec.dim, subset->indices));
    } else {
      const auto& m = std::get<ComplexMatrix>(def);
      if (m.dim() != spec.dim) throw GeneratorError(K::DimensionMismatch, "projector for symbol '" + a + "'");
      g.projectors_.push_back(m);
    }
  }
  if (auto report = validate_projector_family(g.projectors_, spec.tolerance); !report.ok()) {
    std::string detail;
    for (const auto& issue : report.issues) {
      if (!detail.empty()) detail += ", ";
      detail += to_string(issue.check);
      for (auto s : issue.symbols) detail += " '" + spec.alphabet[s] + "'";
    }
    throw GeneratorError(K::InvalidProjectorFamily, detail, std::move(report));
  }
  for (const auto& p : g.projectors_) g.transitions_.push_back(g.unitary_ * p);
  return g;
}

inline const ComplexMatrix& transition_matrix(const QuantumGenerator& g, std::string_view s) {
  return g.transition(g.symbol_index(s));
}

namespace detail {

inline void require_normalized(const ComplexRowVector& state, std::size_t dim) {
  if (state.dim() != dim) throw DimensionError("state dimension does not match generator");
  if (std::abs(squared_norm(state) - 1.0) > kDefaultTolerance) throw std::invalid_argument("state is not normalized");
}

inline double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace detail

/// Born-rule probability of emitting s from a normalized state.
inline double symbol_probability(const QuantumGenerator& g, const ComplexRowVector& state, SymbolIndex s) {
  detail::require_normalized(state, g.dim());
  return detail::clamp_probability(squared_norm(evolve(state, g.transition(s))));
}

inline double symbol_probability(const QuantumGenerator& g, const ComplexRowVector& state, std::string_view s) {
  return symbol_probability(g, state, g.symbol_index(s));
}

struct GeneratorStep {
  SymbolIndex symbol = 0;
  double probability = 0.0;
  /// Absent when the outcome is impossible (probability at or below the zero threshold).
  std::optional<ComplexRowVector> next_state;

  bool impossible() const { return !next_state.has_value(); }
};

/// Evolve, project on P(s) and renormalize.
inline GeneratorStep step(const QuantumGenerator& g, const ComplexRowVector& state, SymbolIndex s) {
  detail::require_normalized(state, g.dim());
  ComplexRowVector projected = evolve(state, g.transition(s));
  const double p = squared_norm(projected);
  GeneratorStep out{s, detail::clamp_probability(p), std::nullopt};
  if (p > kZeroThreshold) out.next_state = projected.scaled(1.0 / std::sqrt(p));
  return out;
}

inline GeneratorStep step(const QuantumGenerator& g, const ComplexRowVector& state, std::string_view s) {
  return step(g, state, g.symbol_index(s));
}

/// Probability-weighted mixture of normalized pure states.
class StateEnsemble {
 public:
  struct Member {
    double weight;
    ComplexRowVector state;
  };

  explicit StateEnsemble(std::vector<Member> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("ensemble must have at least one member");
    double total = 0.0;
    const std::size_t dim = members_.front().state.dim();
    for (const auto& m : members_) {
      if (!(m.weight >= 0.0)) throw std::invalid_argument("ensemble weights must be non-negative");
      if (m.state.dim() != dim) throw DimensionError("ensemble members differ in dimension");
      if (std::abs(squared_norm(m.state) - 1.0) > kDefaultTolerance)
        throw std::invalid_argument("ensemble member is not normalized");
      total += m.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("ensemble weights do not sum to 1");
  }

  static StateEnsemble pure(ComplexRowVector state) { return StateEnsemble({{1.0, std::move(state)}}); }

  std::size_t dim() const { return members_.front().state.dim(); }
  const std::vector<Member>& members() const { return members_; }

 private:
  std::vector<Member> members_;
};

/// Uniform mixture over the computational basis. Stationary because |U_ij|^2
/// is doubly stochastic for unitary U.
inline StateEnsemble stationary_ensemble(const QuantumGenerator& g) {
  std::vector<StateEnsemble::Member> members;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) members.push_back({1.0 / static_cast<double>(n), ComplexRowVector::basis(n, i)});
  return StateEnsemble(std::move(members));
}

inline double word_probability(const QuantumGenerator& g, const StateEnsemble& start, std::span<const SymbolIndex> w) {
  if (w.empty()) throw std::invalid_argument("word_probability: empty word");
  if (start.dim() != g.dim()) throw DimensionError("ensemble dimension does not match generator");
  double total = 0.0;
  for (const auto& m : start.members()) {
    ComplexRowVector v = m.state;
    for (SymbolIndex s : w) v = evolve(v, g.transition(s));
    total += m.weight * squared_norm(v);
  }
  return detail::clamp_probability(total);
}

inline double word_probability(const QuantumGenerator& g, const StateEnsemble& start, std::string_view w) {
  const Word word = g.parse_word(w);
  return word_probability(g, start, word);
}

}  // namespace qsofic

#endif  // QSOFIC_GENERATOR_HPP

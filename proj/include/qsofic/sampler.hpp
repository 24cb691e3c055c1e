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

#ifndef QSOFIC_SAMPLER_HPP
#define QSOFIC_SAMPLER_HPP

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qsofic/generator.hpp"

namespace qsofic {

/// Pinned generator: MT19937-64, whose output sequence is fixed by the C++
/// standard. Uniform variates use the top 53 bits, so any MT19937-64
/// implementation reproduces sampled sequences bit for bit.
class SamplerRng {
 public:
  explicit SamplerRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct SampleRun {
  std::uint64_t seed = 0;
  Word symbols;
  ComplexRowVector final_state;

  std::size_t length() const { return symbols.size(); }
};

using SampleStart = std::variant<ComplexRowVector, StateEnsemble>;

namespace detail {

// Index of the first cumulative weight exceeding u; round-off past the end
// falls back to the last positive weight.
template <typename Weights>
std::size_t draw_index(const Weights& weights, double u) {
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_positive = i;
    cumulative += weights[i];
    if (u < cumulative) return i;
  }
  return last_positive;
}

}  // namespace detail

/// Born-rule sampling of n measurement outcomes. An ensemble start draws one
/// member by weight first; afterwards only the renormalized pure state is tracked.
/// Each step consumes exactly one uniform variate.
inline SampleRun sample_sequence(const QuantumGenerator& g, const SampleStart& start, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_sequence: n must be >= 1");
  SamplerRng rng(seed);
  ComplexRowVector state;
  if (const auto* ensemble = std::get_if<StateEnsemble>(&start)) {
    std::vector<double> weights;
    for (const auto& m : ensemble->members()) weights.push_back(m.weight);
    state = ensemble->members()[detail::draw_index(weights, rng.uniform())].state;
  } else {
    state = std::get<ComplexRowVector>(start);
  }
  detail::require_normalized(state, g.dim());

  SampleRun run;
  run.seed = seed;
  run.symbols.reserve(n);
  std::vector<ComplexRowVector> projected(g.alphabet_size());
  std::vector<double> probs(g.alphabet_size());
  for (std::size_t t = 0; t < n; ++t) {
    for (SymbolIndex s = 0; s < g.alphabet_size(); ++s) {
      projected[s] = evolve(state, g.transition(s));
      probs[s] = squared_norm(projected[s]);
    }
    const SymbolIndex s = detail::draw_index(probs, rng.uniform());
    state = projected[s].scaled(1.0 / std::sqrt(probs[s]));
    run.symbols.push_back(s);
  }
  run.final_state = std::move(state);
  return run;
}

/// Sliding-window word counts for lengths 1..max_length.
struct EmpiricalDistribution {
  std::vector<std::map<Word, std::uint64_t>> counts;  // counts[L-1]
  std::vector<std::uint64_t> windows;                 // windows[L-1] = n - L + 1

  std::size_t max_length() const { return counts.size(); }

  std::uint64_t count(const Word& w) const {
    if (w.empty() || w.size() > counts.size()) return 0;
    const auto& level = counts[w.size() - 1];
    auto it = level.find(w);
    return it == level.end() ? 0 : it->second;
  }

  double frequency(const Word& w) const {
    if (w.empty() || w.size() > counts.size()) return 0.0;
    return static_cast<double>(count(w)) / static_cast<double>(windows[w.size() - 1]);
  }
};

inline EmpiricalDistribution empirical_distribution(const SampleRun& run, std::size_t max_length) {
  if (max_length == 0) throw std::invalid_argument("empirical_distribution: max_length must be >= 1");
  if (max_length > run.length()) throw std::invalid_argument("empirical_distribution: max_length exceeds run length");
  EmpiricalDistribution out;
  out.counts.resize(max_length);
  for (std::size_t length = 1; length <= max_length; ++length) {
    auto& level = out.counts[length - 1];
    const std::size_t windows = run.length() - length + 1;
    out.windows.push_back(windows);
    Word w;
    for (std::size_t i = 0; i < windows; ++i) {
      w.assign(run.symbols.begin() + static_cast<std::ptrdiff_t>(i),
               run.symbols.begin() + static_cast<std::ptrdiff_t>(i + length));
      ++level[w];
    }
  }
  return out;
}

}  // namespace qsofic

#endif  // QSOFIC_SAMPLER_HPP

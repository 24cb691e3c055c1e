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

#ifndef QSOFIC_LANGUAGE_HPP
#define QSOFIC_LANGUAGE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsofic/generator.hpp"

namespace qsofic {

/// Exact word probabilities for every length 1..max_length. Words that are
/// absent have probability zero (forbidden).
class WordDistribution {
 public:
  using Level = std::map<Word, double>;

  WordDistribution(std::vector<std::string> alphabet, std::size_t max_length)
      : alphabet_(std::move(alphabet)), levels_(max_length) {
    if (max_length == 0) throw std::invalid_argument("WordDistribution: max_length must be >= 1");
  }

  std::size_t max_length() const { return levels_.size(); }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }

  const Level& at_length(std::size_t length) const {
    if (length == 0 || length > levels_.size()) throw std::out_of_range("word length out of range");
    return levels_[length - 1];
  }

  void set(Word w, double p) {
    if (w.empty() || w.size() > levels_.size()) throw std::out_of_range("word length out of range");
    for (SymbolIndex s : w)
      if (s >= alphabet_.size()) throw std::out_of_range("symbol index out of range");
    levels_[w.size() - 1][std::move(w)] = p;
  }

  /// Zero for absent words and for lengths outside 1..max_length.
  double probability(const Word& w) const {
    if (w.empty() || w.size() > levels_.size()) return 0.0;
    const auto& level = levels_[w.size() - 1];
    auto it = level.find(w);
    return it == level.end() ? 0.0 : it->second;
  }

  bool admissible(const Word& w, double threshold = kZeroThreshold) const {
    if (w.empty()) return true;
    return probability(w) > threshold;
  }

 private:
  std::vector<std::string> alphabet_;
  std::vector<Level> levels_;
};

namespace detail {

struct WordNode {
  Word word;
  std::vector<ComplexRowVector> branches;  // one unnormalized vector per ensemble member
};

inline void expand_words(const QuantumGenerator& g, const StateEnsemble& start, const WordNode& node, std::size_t max_length,
                         double threshold, WordDistribution& out) {
  const auto& members = start.members();
  for (SymbolIndex s = 0; s < g.alphabet_size(); ++s) {
    WordNode child{node.word, {}};
    child.word.push_back(s);
    child.branches.reserve(members.size());
    double p = 0.0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      child.branches.push_back(evolve(node.branches[k], g.transition(s)));
      p += members[k].weight * squared_norm(child.branches.back());
    }
    p = clamp_probability(p);
    if (p <= threshold) continue;
    out.set(child.word, p);
    if (child.word.size() < max_length) expand_words(g, start, child, max_length, threshold, out);
  }
}

}  // namespace detail

/// Depth-first expansion of the word tree, pruning subtrees whose probability
/// falls to the threshold. Sound because Pr(ws) <= Pr(w).
inline WordDistribution enumerate_words(const QuantumGenerator& g, const StateEnsemble& start, std::size_t max_length,
                                        double threshold = kZeroThreshold) {
  if (start.dim() != g.dim()) throw DimensionError("ensemble dimension does not match generator");
  WordDistribution out(g.alphabet(), max_length);
  detail::WordNode root;
  for (const auto& m : start.members()) root.branches.push_back(m.state);
  detail::expand_words(g, start, root, max_length, threshold, out);
  return out;
}

enum class LanguageCheck { Normalization, ExtensionConsistency, ShiftStationarity, SubwordClosure };

inline const char* to_string(LanguageCheck c) {
  switch (c) {
    case LanguageCheck::Normalization: return "normalization";
    case LanguageCheck::ExtensionConsistency: return "extension-consistency";
    case LanguageCheck::ShiftStationarity: return "shift-stationarity";
    case LanguageCheck::SubwordClosure: return "subword-closure";
  }
  return "unknown";
}

struct LanguageViolation {
  LanguageCheck check;
  std::size_t length;
  Word word;  // empty for normalization
  double magnitude;
};

struct LanguageReport {
  std::vector<LanguageViolation> violations;
  double worst_normalization = 0.0;
  double worst_extension = 0.0;
  double worst_stationarity = 0.0;

  bool ok() const { return violations.empty(); }
  std::size_t count(LanguageCheck c) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [c](const LanguageViolation& v) { return v.check == c; }));
  }
};

/// Verifies the process-language conditions: per-length normalization,
/// Pr(w) = sum_s Pr(ws), Pr(w) = sum_s Pr(sw), and prefix/suffix closure of
/// admissible words.
inline LanguageReport check_process_language(const WordDistribution& d, double tol = 1e-9,
                                             double threshold = kZeroThreshold) {
  LanguageReport report;
  const std::size_t n = d.alphabet_size();
  for (std::size_t length = 1; length <= d.max_length(); ++length) {
    double sum = 0.0;
    for (const auto& [w, p] : d.at_length(length)) sum += p;
    const double dev = std::abs(sum - 1.0);
    report.worst_normalization = std::max(report.worst_normalization, dev);
    if (dev > tol) report.violations.push_back({LanguageCheck::Normalization, length, {}, dev});
  }

  for (std::size_t length = 1; length < d.max_length(); ++length) {
    for (const auto& [w, p] : d.at_length(length)) {
      double right = 0.0;
      double left = 0.0;
      Word ext = w;
      ext.push_back(0);
      Word pre(1, 0);
      pre.insert(pre.end(), w.begin(), w.end());
      for (SymbolIndex s = 0; s < n; ++s) {
        ext.back() = s;
        pre.front() = s;
        right += d.probability(ext);
        left += d.probability(pre);
      }
      const double dr = std::abs(p - right);
      const double dl = std::abs(p - left);
      report.worst_extension = std::max(report.worst_extension, dr);
      report.worst_stationarity = std::max(report.worst_stationarity, dl);
      if (dr > tol) report.violations.push_back({LanguageCheck::ExtensionConsistency, length, w, dr});
      if (dl > tol) report.violations.push_back({LanguageCheck::ShiftStationarity, length, w, dl});
    }
  }

  for (std::size_t length = 2; length <= d.max_length(); ++length) {
    for (const auto& [w, p] : d.at_length(length)) {
      if (p <= threshold) continue;
      Word prefix(w.begin(), w.end() - 1);
      Word suffix(w.begin() + 1, w.end());
      if (!d.admissible(prefix, threshold) || !d.admissible(suffix, threshold))
        report.violations.push_back({LanguageCheck::SubwordClosure, length, w, p});
    }
  }
  return report;
}

/// Symbol-labeled, amplitude-weighted edge i --s--> j for each nonzero T(s)_ij.
struct LabeledEdge {
  std::size_t from;
  SymbolIndex symbol;
  std::size_t to;
  Complex amplitude;
};

struct LabeledGraph {
  std::size_t node_count = 0;
  std::vector<LabeledEdge> edges;  // sorted by (from, symbol, to)

  /// Targets reachable from `from` reading `symbol`.
  std::vector<std::size_t> successors(std::size_t from, SymbolIndex symbol) const {
    std::vector<std::size_t> out;
    for (const auto& e : edges)
      if (e.from == from && e.symbol == symbol) out.push_back(e.to);
    return out;
  }
};

inline LabeledGraph extract_graph(const QuantumGenerator& g, double threshold = kZeroThreshold) {
  LabeledGraph graph;
  graph.node_count = g.dim();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (SymbolIndex s = 0; s < g.alphabet_size(); ++s) {
      const auto& t = g.transition(s);
      for (std::size_t j = 0; j < g.dim(); ++j)
        if (std::abs(t(i, j)) > threshold) graph.edges.push_back({i, s, j, t(i, j)});
    }
  return graph;
}

struct DeterminismCheck {
  bool deterministic = true;
  struct Witness {
    std::size_t state;
    SymbolIndex symbol;
    std::vector<std::size_t> successors;
  };
  /// First (state, symbol) with two or more successors, scanning states then symbols.
  std::optional<Witness> witness;
  explicit operator bool() const { return deterministic; }
};

inline DeterminismCheck is_deterministic(const QuantumGenerator& g, double threshold = kZeroThreshold) {
  const LabeledGraph graph = extract_graph(g, threshold);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (SymbolIndex s = 0; s < g.alphabet_size(); ++s) {
      auto next = graph.successors(i, s);
      if (next.size() > 1) return {false, DeterminismCheck::Witness{i, s, std::move(next)}};
    }
  return {};
}

struct ForbiddenWordReport {
  std::size_t scanned_length = 0;
  /// Ordered by length, then lexicographically in alphabet order.
  std::vector<Word> irreducible_forbidden;
  /// all_forbidden_count[L-1] = |A|^L minus admissible words of length L (saturating).
  std::vector<std::uint64_t> all_forbidden_count;
};

/// A forbidden word is irreducible when dropping either its first or its last
/// symbol leaves an admissible word.
inline ForbiddenWordReport irreducible_forbidden_words(const WordDistribution& d, double threshold = kZeroThreshold) {
  ForbiddenWordReport report;
  report.scanned_length = d.max_length();
  const std::size_t n = d.alphabet_size();
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (std::size_t length = 1; length <= d.max_length(); ++length) {
    total = (total > kMax / std::max<std::size_t>(n, 1)) ? kMax : total * n;
    std::uint64_t admissible = 0;
    for (const auto& [w, p] : d.at_length(length))
      if (p > threshold) ++admissible;
    report.all_forbidden_count.push_back(total == kMax ? kMax : total - admissible);

    if (length == 1) {
      for (SymbolIndex s = 0; s < n; ++s)
        if (!d.admissible(Word{s}, threshold)) report.irreducible_forbidden.push_back(Word{s});
      continue;
    }
    for (const auto& [u, p] : d.at_length(length - 1)) {
      if (p <= threshold) continue;
      Word w = u;
      w.push_back(0);
      for (SymbolIndex s = 0; s < n; ++s) {
        w.back() = s;
        if (d.admissible(w, threshold)) continue;
        Word suffix(w.begin() + 1, w.end());
        if (d.admissible(suffix, threshold)) report.irreducible_forbidden.push_back(w);
      }
    }
  }
  return report;
}

enum class ShiftVerdict { FiniteType, StrictlySoficEvidence, Inconclusive, NotApplicable };

inline const char* to_string(ShiftVerdict v) {
  switch (v) {
    case ShiftVerdict::FiniteType: return "finite-type";
    case ShiftVerdict::StrictlySoficEvidence: return "strictly-sofic-evidence";
    case ShiftVerdict::Inconclusive: return "inconclusive";
    case ShiftVerdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

/// Strictly-sofic evidence is only reported for horizons at least this long.
inline constexpr std::size_t kMinSoficHorizon = 8;

struct SyncRow {
  std::size_t length;
  std::uint64_t admissible;
  std::uint64_t synchronizing;
  double fraction() const { return admissible == 0 ? 0.0 : static_cast<double>(synchronizing) / static_cast<double>(admissible); }
};

struct ShiftClassification {
  ShiftVerdict verdict = ShiftVerdict::Inconclusive;
  std::optional<std::size_t> order;  // set for FiniteType
  std::vector<SyncRow> synchronization_table;
  /// Symbols s such that s^M is admissible and non-synchronizing for every scanned M.
  std::vector<SymbolIndex> persistent_runs;
  /// A non-synchronizing admissible word at the last scanned length, if any.
  std::optional<Word> witness;
  DeterminismCheck determinism;
};

/// Synchronizing-word test on the labeled graph. A word synchronizes when
/// every path presenting it ends in the same state; the presentation is of
/// finite type at order M once every admissible length-M word synchronizes.
/// Words are grouped by their terminal-state set, which determines all
/// extensions, so the scan is polynomial in the number of distinct sets.
inline ShiftClassification classify_shift(const QuantumGenerator& g, std::size_t max_horizon,
                                          double threshold = kZeroThreshold) {
  if (max_horizon == 0) throw std::invalid_argument("classify_shift: horizon must be >= 1");
  ShiftClassification out;
  out.determinism = is_deterministic(g, threshold);
  if (!out.determinism) {
    out.verdict = ShiftVerdict::NotApplicable;
    return out;
  }
  const LabeledGraph graph = extract_graph(g, threshold);
  const std::size_t n = g.dim();
  const std::size_t k = g.alphabet_size();
  using StateSet = std::vector<std::size_t>;

  // succ[state][symbol] is the unique successor, or n when there is none.
  std::vector<std::vector<std::size_t>> succ(n, std::vector<std::size_t>(k, n));
  for (const auto& e : graph.edges) succ[e.from][e.symbol] = e.to;
  auto advance = [&](const StateSet& from, SymbolIndex s) {
    StateSet to;
    for (std::size_t q : from)
      if (succ[q][s] < n) to.push_back(succ[q][s]);
    std::sort(to.begin(), to.end());
    to.erase(std::unique(to.begin(), to.end()), to.end());
    return to;
  };

  struct Group {
    std::uint64_t count;
    Word representative;
  };
  StateSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::map<StateSet, Group> level{{all, {1, {}}}};
  std::vector<StateSet> runs(k, all);
  std::vector<bool> run_alive(k, true);

  for (std::size_t length = 1; length <= max_horizon; ++length) {
    std::map<StateSet, Group> next;
    for (const auto& [set, group] : level)
      for (SymbolIndex s = 0; s < k; ++s) {
        StateSet to = advance(set, s);
        if (to.empty()) continue;
        auto [it, inserted] = next.try_emplace(std::move(to), Group{0, {}});
        if (inserted) {
          it->second.representative = group.representative;
          it->second.representative.push_back(s);
        }
        it->second.count += group.count;
      }
    level = std::move(next);

    SyncRow row{length, 0, 0};
    out.witness.reset();
    for (const auto& [set, group] : level) {
      row.admissible += group.count;
      if (set.size() == 1)
        row.synchronizing += group.count;
      else if (!out.witness || group.representative < *out.witness)
        out.witness = group.representative;
    }
    out.synchronization_table.push_back(row);

    for (SymbolIndex s = 0; s < k; ++s) {
      runs[s] = advance(runs[s], s);
      if (runs[s].size() < 2) run_alive[s] = false;
    }
    if (row.synchronizing == row.admissible) {
      out.verdict = ShiftVerdict::FiniteType;
      out.order = length;
      out.witness.reset();
      return out;
    }
  }
  for (SymbolIndex s = 0; s < k; ++s)
    if (run_alive[s]) out.persistent_runs.push_back(s);
  out.verdict = max_horizon >= kMinSoficHorizon ? ShiftVerdict::StrictlySoficEvidence : ShiftVerdict::Inconclusive;
  return out;
}

}  // namespace qsofic

#endif  // QSOFIC_LANGUAGE_HPP

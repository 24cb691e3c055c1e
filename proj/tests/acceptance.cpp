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

// Acceptance suite. Usage: qsofic_acceptance [N]
// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qsofic/cli.hpp"
#include "qsofic/qsofic.hpp"

using namespace qsofic;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string join_words(const QuantumGenerator& g, const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? "," : "") + g.format_word(words[i]);
  return out + "}";
}

QuantumGenerator preset(Spin1Observable o) { return spin1_preset(o); }

WordDistribution words_of(const QuantumGenerator& g, std::size_t max_length) {
  return enumerate_words(g, stationary_ensemble(g), max_length);
}

Outcome closed_form_rates() {
  const double hy = entropy_rate_closed_form(preset(Spin1Observable::Jy2));
  const double hx = entropy_rate_closed_form(preset(Spin1Observable::Jx2));
  const bool pass = std::abs(hy - 0.666667) <= 1e-6 && std::abs(hx - 0.666667) <= 1e-6;
  return {pass, "h(jy2) = " + fmt("%.9f", hy) + ", h(jx2) = " + fmt("%.9f", hx) + " (0.666667 +/- 1e-6)"};
}

Outcome golden_mean_excess() {
  const auto d = words_of(preset(Spin1Observable::Jy2), 10);
  const double markov = excess_entropy_markov(d, 1, 2.0 / 3.0);
  const double estimate = excess_entropy_estimate(entropy_curve(d), 2.0 / 3.0).value;
  const bool pass = std::abs(markov - 0.2516) <= 1e-3 && std::abs(estimate - 0.2516) <= 1e-3;
  return {pass, "E_markov = " + fmt("%.6f", markov) + ", E(10) = " + fmt("%.6f", estimate) + " (0.2516 +/- 1e-3)"};
}

Outcome even_excess() {
  const auto g = preset(Spin1Observable::Jx2);
  const auto d = words_of(g, 16);
  const auto excess = excess_entropy_estimate(entropy_curve(d), entropy_rate_closed_form(g));
  bool monotone = true;
  for (std::size_t i = 1; i < excess.trace.size(); ++i) monotone = monotone && excess.trace[i] >= excess.trace[i - 1];
  const bool pass = std::abs(excess.value - 0.902) <= 0.01 && monotone;
  return {pass, "E(16) = " + fmt("%.6f", excess.value) + " (0.902 +/- 0.01), trace " +
                    (monotone ? "non-decreasing" : "not monotone")};
}

Outcome forbidden_words() {
  const auto gy = preset(Spin1Observable::Jy2);
  const auto gx = preset(Spin1Observable::Jx2);
  const auto fy = irreducible_forbidden_words(words_of(gy, 12)).irreducible_forbidden;
  const auto fx = irreducible_forbidden_words(words_of(gx, 12)).irreducible_forbidden;
  std::vector<Word> expected_x;
  for (std::size_t k = 1; 2 * k + 1 <= 12; ++k) {
    Word w{0};
    w.insert(w.end(), 2 * k - 1, 1);
    w.push_back(0);
    expected_x.push_back(w);
  }
  const bool pass = fy == std::vector<Word>{{0, 0}} && fx == expected_x;
  return {pass, "jy2 " + join_words(gy, fy) + ", jx2 " + join_words(gx, fx)};
}

Outcome determinism() {
  const auto gz = preset(Spin1Observable::Jz2);
  const auto y = is_deterministic(preset(Spin1Observable::Jy2));
  const auto x = is_deterministic(preset(Spin1Observable::Jx2));
  const auto z = is_deterministic(gz);
  const bool pass = y.deterministic && x.deterministic && !z.deterministic && z.witness.has_value();
  std::string detail = std::string("jy2 ") + (y ? "deterministic" : "nondeterministic") + ", jx2 " +
                       (x ? "deterministic" : "nondeterministic") + ", jz2 " + (z ? "deterministic" : "nondeterministic");
  if (z.witness) {
    detail += " (state " + std::to_string(z.witness->state) + " on '" + gz.symbol(z.witness->symbol) + "' -> {";
    for (std::size_t i = 0; i < z.witness->successors.size(); ++i)
      detail += (i ? "," : "") + std::to_string(z.witness->successors[i]);
    detail += "})";
  }
  return {pass, detail};
}

Outcome soficity() {
  const auto y = classify_shift(preset(Spin1Observable::Jy2), 16);
  const auto x = classify_shift(preset(Spin1Observable::Jx2), 16);
  const bool pass = y.verdict == ShiftVerdict::FiniteType && y.order == std::size_t{2} &&
                    x.verdict == ShiftVerdict::StrictlySoficEvidence;
  std::string detail = std::string("jy2 ") + to_string(y.verdict);
  if (y.order) detail += "(order " + std::to_string(*y.order) + ")";
  return {pass, detail + ", jx2 " + to_string(x.verdict)};
}

Outcome basis_change_equality() {
  const auto dz = words_of(preset(Spin1Observable::Jz2), 10);
  const auto dy = words_of(preset(Spin1Observable::Jy2), 10);
  double worst = 0.0;
  std::size_t compared = 0;
  for (std::size_t length = 1; length <= 10; ++length) {
    const std::size_t count = std::size_t{1} << length;
    for (std::size_t code = 0; code < count; ++code) {
      Word w;
      for (std::size_t i = 0; i < length; ++i) w.push_back((code >> (length - 1 - i)) & 1U);
      worst = std::max(worst, std::abs(dz.probability(w) - dy.probability(w)));
      ++compared;
    }
  }
  return {worst <= 1e-9, std::to_string(compared) + " words, max |dPr| = " + fmt("%.3g", worst) + " (<= 1e-9)"};
}

Outcome property_suites() {
  bool pass = true;
  std::string detail;
  for (auto o : {Spin1Observable::Jy2, Spin1Observable::Jx2}) {
    const auto r = check_process_language(words_of(preset(o), 10), 1e-9, kZeroThreshold);
    pass = pass && r.ok();
    if (!detail.empty()) detail += "; ";
    detail += std::string(o == Spin1Observable::Jy2 ? "jy2" : "jx2") + " norm " + fmt("%.2g", r.worst_normalization) +
              ", ext " + fmt("%.2g", r.worst_extension) + ", stat " + fmt("%.2g", r.worst_stationarity) + ", closure " +
              std::to_string(r.count(LanguageCheck::SubwordClosure)) + " violations";
  }
  return {pass, detail};
}

constexpr std::uint64_t kMonteCarloSeed = 20260101;

Outcome monte_carlo() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  double worst_z = 0.0;
  std::uint64_t bad_count = 0;
  for (auto o : {Spin1Observable::Jy2, Spin1Observable::Jx2}) {
    const auto g = preset(o);
    const auto exact = words_of(g, 3);
    const auto run = sample_sequence(g, stationary_ensemble(g), 1'000'000, kMonteCarloSeed);
    const auto emp = empirical_distribution(run, 3);
    for (std::size_t length = 1; length <= 2; ++length)
      for (std::size_t code = 0; code < (std::size_t{1} << length); ++code) {
        Word w;
        for (std::size_t i = 0; i < length; ++i) w.push_back((code >> (length - 1 - i)) & 1U);
        const double p = exact.probability(w);
        const double n = static_cast<double>(emp.windows[length - 1]);
        const double sigma = std::sqrt(p * (1.0 - p) / n);
        const double dev = std::abs(emp.frequency(w) - p);
        if (sigma > 0.0) {
          worst_z = std::max(worst_z, dev / sigma);
          pass = pass && dev <= 5.0 * sigma;
        } else {
          pass = pass && emp.count(w) == 0;
        }
      }
    const Word banned = o == Spin1Observable::Jy2 ? Word{0, 0} : Word{0, 1, 0};
    bad_count += emp.count(banned);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  pass = pass && bad_count == 0 && seconds < 30.0;
  return {pass, "seed " + std::to_string(kMonteCarloSeed) + ", worst |z| = " + fmt("%.2f", worst_z) +
                    " (<= 5), forbidden hits " + std::to_string(bad_count) + ", " + fmt("%.2f", seconds) + " s (< 30 s)"};
}

std::string command_output(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  run_command(args, out, err);
  return out.str();
}

Outcome reproducibility() {
  const auto g = preset(Spin1Observable::Jx2);
  const auto a = sample_sequence(g, stationary_ensemble(g), 100'000, 7);
  const auto b = sample_sequence(g, stationary_ensemble(g), 100'000, 7);
  const std::vector<std::string> sample = {"sample", "--preset", "jx2", "--length", "100000", "--seed", "7",
                                           "--lmax", "4",      "--format", "csv"};
  const std::vector<std::string> words = {"words", "--preset", "jx2", "--max-length", "10"};
  const std::string s1 = command_output(sample), s2 = command_output(sample);
  const std::string w1 = command_output(words), w2 = command_output(words);
  const bool seq_equal = a.symbols == b.symbols;
  const bool pass = seq_equal && !s1.empty() && s1 == s2 && !w1.empty() && w1 == w2;
  return {pass, std::string("sequences ") + (seq_equal ? "identical" : "differ") + ", sample CSV " +
                    (s1 == s2 ? "identical" : "differ") + " (" + std::to_string(s1.size()) + " bytes), words CSV " +
                    (w1 == w2 ? "identical" : "differ") + " (" + std::to_string(w1.size()) + " bytes)"};
}

const std::vector<std::function<Outcome()>> kCriteria = {
    closed_form_rates, golden_mean_excess, even_excess,     forbidden_words, determinism,
    soficity,          basis_change_equality, property_suites, monte_carlo,     reproducibility,
};

}  // namespace

int main(int argc, char** argv) {
  std::size_t first = 1, last = kCriteria.size();
  if (argc > 1) {
    const long n = std::strtol(argv[1], nullptr, 10);
    if (n < 1 || n > static_cast<long>(kCriteria.size())) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], kCriteria.size());
      return 2;
    }
    first = last = static_cast<std::size_t>(n);
  }
  bool all = true;
  for (std::size_t i = first; i <= last; ++i) {
    Outcome o;
    try {
      o = kCriteria[i - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i, o.detail.c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

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

#ifndef QSOFIC_CLI_HPP
#define QSOFIC_CLI_HPP

// Command dispatch for the qsofic tool. Exit codes: 0 success, 1 validation
// failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsofic/generator.hpp"
#include "qsofic/info.hpp"
#include "qsofic/language.hpp"
#include "qsofic/presets.hpp"
#include "qsofic/report.hpp"
#include "qsofic/sampler.hpp"
#include "qsofic/spec_io.hpp"

namespace qsofic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

namespace cli_detail {

using nlohmann::json;

struct Source {
  std::string spec_path;
  std::string preset;
};

inline void add_source_options(CLI::App* cmd, Source& src) {
  auto* spec = cmd->add_option("--spec", src.spec_path, "generator spec file (JSON)");
  auto* preset = cmd->add_option("--preset", src.preset, "built-in generator: jx2, jy2, jz2");
  spec->excludes(preset);
  preset->excludes(spec);
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline QuantumGenerator load_generator(const Source& src) {
  if (!src.preset.empty()) {
    auto obs = parse_observable(src.preset);
    if (!obs) throw UsageError("unknown preset '" + src.preset + "' (try: preset --list)");
    return spin1_preset(*obs);
  }
  if (src.spec_path.empty()) throw UsageError("one of --spec or --preset is required");
  return build_generator(load_spec_file(src.spec_path));
}

inline json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

inline json validation_report(const GeneratorSpec& spec) {
  json report;
  report["dimension"] = spec.dim;
  report["alphabet"] = spec.alphabet;
  json checks = json::array();
  if (spec.unitary.dim() == spec.dim) {
    auto u = is_unitary(spec.unitary, spec.tolerance);
    checks.push_back({{"check", "unitarity"}, {"passed", u.unitary}, {"max_deviation", u.max_deviation}});
  }
  std::vector<ComplexMatrix> family;
  std::vector<std::string> names;
  bool expandable = true;
  for (const auto& [symbol, def] : spec.projectors) {
    names.push_back(symbol);
    if (const auto* subset = std::get_if<BasisSubset>(&def)) {
      try {
        family.push_back(ComplexMatrix::basis_projector(spec.dim, subset->indices));
      } catch (const DimensionError&) {
        expandable = false;
      }
    } else {
      family.push_back(std::get<ComplexMatrix>(def));
    }
  }
  if (expandable && !family.empty()) {
    auto pr = validate_projector_family(family, spec.tolerance);
    for (auto c : {ProjectorCheck::Dimension, ProjectorCheck::Hermiticity, ProjectorCheck::Idempotency,
                   ProjectorCheck::Orthogonality, ProjectorCheck::Completeness}) {
      json entry{{"check", to_string(c)}, {"passed", !pr.failed(c)}};
      json offenders = json::array();
      for (const auto& issue : pr.issues) {
        if (issue.check != c) continue;
        json symbols = json::array();
        for (auto s : issue.symbols) symbols.push_back(names[s]);
        offenders.push_back({{"symbols", symbols}, {"deviation", issue.deviation}});
      }
      if (!offenders.empty()) entry["failures"] = offenders;
      checks.push_back(entry);
    }
  }
  report["checks"] = checks;
  try {
    build_generator(spec);
    report["valid"] = true;
  } catch (const GeneratorError& e) {
    report["valid"] = false;
    report["error"] = e.what();
  }
  return report;
}

inline int cmd_validate(const Source& src, std::ostream& out, std::ostream& err) {
  GeneratorSpec spec;
  if (!src.preset.empty()) {
    auto obs = parse_observable(src.preset);
    if (!obs) throw UsageError("unknown preset '" + src.preset + "'");
    spec = spin1_spec(*obs);
  } else if (!src.spec_path.empty()) {
    spec = load_spec_file(src.spec_path);
  } else {
    throw UsageError("one of --spec or --preset is required");
  }
  json report = validation_report(spec);
  out << report.dump(2) << "\n";
  if (!report["valid"].get<bool>()) {
    err << "invalid generator: " << report["error"].get<std::string>() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

inline int cmd_words(const Source& src, std::size_t max_length, const std::string& format, bool plot, std::ostream& out) {
  const auto g = load_generator(src);
  const auto d = enumerate_words(g, stationary_ensemble(g), max_length);
  if (plot) {
    const auto rows = emit_distribution_plot_data(d, max_length);
    if (format == "json")
      out << json{{"length", max_length}, {"rows", plot_json(g.alphabet(), rows)}}.dump(2) << "\n";
    else
      out << plot_csv(g.alphabet(), rows);
  } else {
    if (format == "json")
      out << distribution_json(d).dump(2) << "\n";
    else
      out << distribution_csv(d);
  }
  return kExitOk;
}

inline json summary_json(const InfoSummary& s) {
  json j;
  j["h_mu_closed"] = optional_number(s.h_mu_closed);
  j["h_mu_estimate"] = s.h_mu_estimate;
  j["E_estimate"] = s.E_estimate;
  j["E_markov"] = optional_number(s.E_markov);
  j["markov_order"] = s.markov_order ? json(*s.markov_order) : json(nullptr);
  j["max_length"] = s.curve.max_length();
  j["block_entropy"] = std::vector<double>(s.curve.values.begin() + 1, s.curve.values.end());
  j["entropy_rate_increments"] = s.rate.increments;
  j["excess_entropy_trace"] = s.excess.trace;
  return j;
}

inline int cmd_entropy(const Source& src, std::size_t max_length, std::ostream& out) {
  if (max_length < 2) throw UsageError("--max-length must be >= 2 for entropy estimates");
  const auto g = load_generator(src);
  const auto d = enumerate_words(g, stationary_ensemble(g), max_length);
  json j = summary_json(summarize(g, d));
  j["deterministic"] = is_deterministic(g).deterministic;
  out << j.dump(2) << "\n";
  return kExitOk;
}

inline int cmd_classify(const Source& src, std::size_t horizon, std::size_t scan_length, std::ostream& out) {
  const auto g = load_generator(src);
  json j;
  const auto det = is_deterministic(g);
  j["deterministic"] = det.deterministic;
  if (det.witness)
    j["witness"] = {{"state", det.witness->state},
                    {"symbol", g.symbol(det.witness->symbol)},
                    {"successors", det.witness->successors}};
  else
    j["witness"] = nullptr;

  const auto d = enumerate_words(g, stationary_ensemble(g), scan_length);
  const auto forbidden = irreducible_forbidden_words(d);
  json words = json::array();
  for (const auto& w : forbidden.irreducible_forbidden) words.push_back(g.format_word(w));
  j["irreducible_forbidden"] = words;
  j["forbidden_scan_length"] = forbidden.scanned_length;
  j["forbidden_counts"] = forbidden.all_forbidden_count;

  const auto c = classify_shift(g, horizon);
  json cls;
  cls["verdict"] = to_string(c.verdict);
  cls["order"] = c.order ? json(*c.order) : json(nullptr);
  cls["horizon"] = horizon;
  json table = json::array();
  for (const auto& row : c.synchronization_table)
    table.push_back({{"length", row.length},
                     {"admissible", row.admissible},
                     {"synchronizing", row.synchronizing},
                     {"fraction", row.fraction()}});
  cls["synchronization_table"] = table;
  json runs = json::array();
  for (auto s : c.persistent_runs) runs.push_back(g.symbol(s));
  cls["persistent_runs"] = runs;
  cls["witness"] = c.witness ? json(g.format_word(*c.witness)) : json(nullptr);
  j["classification"] = cls;
  out << j.dump(2) << "\n";
  return kExitOk;
}

inline int cmd_sample(const Source& src, std::size_t length, std::uint64_t seed, std::size_t lmax,
                      const std::string& format, const std::string& sequence_out, std::ostream& out) {
  if (lmax == 0 || lmax > length) throw UsageError("--lmax must be between 1 and --length");
  const auto g = load_generator(src);
  const auto ensemble = stationary_ensemble(g);
  const auto run = sample_sequence(g, ensemble, length, seed);
  const auto emp = empirical_distribution(run, lmax);
  const auto exact = enumerate_words(g, ensemble, lmax);

  const std::string sequence = g.format_word(run.symbols);
  if (!sequence_out.empty()) {
    std::ofstream f(sequence_out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + sequence_out);
    f << sequence << "\n";
  }

  // Every word of length <= lmax that is either sampled or admissible.
  struct Row {
    Word word;
    std::uint64_t count;
    double empirical;
    double exact;
  };
  std::vector<Row> rows;
  for (std::size_t L = 1; L <= lmax; ++L) {
    std::map<Word, bool> seen;
    for (const auto& [w, c] : emp.counts[L - 1]) seen[w] = true;
    for (const auto& [w, p] : exact.at_length(L)) seen[w] = true;
    for (const auto& [w, unused] : seen) rows.push_back({w, emp.count(w), emp.frequency(w), exact.probability(w)});
  }

  if (format == "csv") {
    out << "word,count,empirical,exact\n";
    for (const auto& r : rows)
      out << g.format_word(r.word) << "," << r.count << "," << format_number(r.empirical) << "," << format_number(r.exact)
          << "\n";
    return kExitOk;
  }
  json j;
  j["seed"] = seed;
  j["length"] = length;
  j["sequence"] = sequence;
  json cmp = json::array();
  for (const auto& r : rows) {
    const double n = static_cast<double>(emp.windows[r.word.size() - 1]);
    const double sigma = std::sqrt(r.exact * (1.0 - r.exact) / n);
    cmp.push_back({{"word", g.format_word(r.word)},
                   {"count", r.count},
                   {"empirical", r.empirical},
                   {"exact", r.exact},
                   {"sigma", sigma}});
  }
  j["comparison"] = cmp;
  out << j.dump(2) << "\n";
  return kExitOk;
}

inline int cmd_preset(bool list, const std::string& show, std::ostream& out) {
  if (!show.empty()) {
    auto obs = parse_observable(show);
    if (!obs) throw UsageError("unknown preset '" + show + "'");
    out << spec_to_json_text(spin1_spec(*obs));
    return kExitOk;
  }
  if (!list) throw UsageError("preset requires --list or --show NAME");
  for (const auto& p : kSpin1Presets) out << p.name << "\t" << p.description << "\n";
  return kExitOk;
}

}  // namespace cli_detail

/// Runs one qsofic subcommand. args excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"qsofic: quantum finite-state generators, process languages and information measures"};
  app.require_subcommand(1);

  Source src;
  std::size_t max_length = 0;
  std::string format = "csv";
  bool plot = false;
  std::size_t horizon = 16;
  std::size_t scan_length = 12;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  std::size_t lmax = 2;
  std::string sequence_out;
  bool list = false;
  std::string show;

  auto* validate = app.add_subcommand("validate", "run all structural checks on a generator");
  add_source_options(validate, src);

  auto* words = app.add_subcommand("words", "exact word distribution under the stationary ensemble");
  add_source_options(words, src);
  words->add_option("--max-length", max_length, "longest word length")->required()->check(CLI::Range(1, 64));
  words->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  words->add_flag("--plot", plot, "emit plot rows (word, x = 0.s^L, log2 density) for the longest length");

  auto* entropy = app.add_subcommand("entropy", "block entropy, entropy rate and excess entropy");
  add_source_options(entropy, src);
  entropy->add_option("--max-length", max_length, "longest word length")->required()->check(CLI::Range(2, 64));

  auto* classify = app.add_subcommand("classify", "determinism, forbidden words, finite-type vs strictly sofic");
  add_source_options(classify, src);
  classify->add_option("--mmax", horizon, "synchronizing-word horizon")->check(CLI::Range(1, 64));
  classify->add_option("--max-length", scan_length, "forbidden-word scan length")->check(CLI::Range(1, 64));

  auto* sample = app.add_subcommand("sample", "Monte Carlo measurement sequence with empirical-vs-exact comparison");
  add_source_options(sample, src);
  sample->add_option("--length", length, "number of measurements")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "RNG seed (MT19937-64)")->required();
  sample->add_option("--lmax", lmax, "longest compared word length")->check(CLI::Range(1, 32));
  sample->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sample->add_option("--sequence-out", sequence_out, "write the sampled sequence to this file");

  auto* preset = app.add_subcommand("preset", "list or print built-in generators");
  preset->add_flag("--list", list, "list preset names");
  preset->add_option("--show", show, "print a preset as a spec file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(src, out, err);
    if (words->parsed()) return cmd_words(src, max_length, format, plot, out);
    if (entropy->parsed()) return cmd_entropy(src, max_length, out);
    if (classify->parsed()) return cmd_classify(src, horizon, scan_length, out);
    if (sample->parsed()) return cmd_sample(src, length, seed, lmax, sample->count("--format") ? format : "json", sequence_out, out);
    if (preset->parsed()) return cmd_preset(list, show, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecError& e) {
    err << "spec error at " << e.what() << "\n";
    return kExitInvalid;
  } catch (const GeneratorError& e) {
    err << "invalid generator: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace qsofic

#endif  // QSOFIC_CLI_HPP

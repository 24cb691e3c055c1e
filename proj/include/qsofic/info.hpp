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

#ifndef QSOFIC_INFO_HPP
#define QSOFIC_INFO_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsofic/generator.hpp"
#include "qsofic/language.hpp"

// Information measures of a word distribution. All logarithms are base 2:
// entropies are in bits, rates in bits per measurement.

namespace qsofic {

class NotDeterministicError : public std::runtime_error {
 public:
  NotDeterministicError()
      : std::runtime_error("closed-form entropy rate requires a deterministic generator; use entropy_rate_estimate") {}
};

/// Shannon entropy of the length-L word distribution, with 0 log 0 = 0.
inline double block_entropy(const WordDistribution& d, std::size_t length) {
  if (length == 0 || length > d.max_length()) throw std::out_of_range("block_entropy: length out of range");
  double h = 0.0;
  for (const auto& [w, p] : d.at_length(length))
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

/// H(L) for L = 0..max_length, with H(0) = 0.
struct EntropyCurve {
  std::vector<double> values;

  std::size_t max_length() const { return values.empty() ? 0 : values.size() - 1; }
  double operator()(std::size_t length) const { return values.at(length); }
};

inline EntropyCurve entropy_curve(const WordDistribution& d) {
  EntropyCurve c;
  c.values.push_back(0.0);
  for (std::size_t length = 1; length <= d.max_length(); ++length) c.values.push_back(block_entropy(d, length));
  return c;
}

struct RateEstimate {
  double rate = 0.0;
  /// increments[L-1] = H(L) - H(L-1), L = 1..max_length.
  std::vector<double> increments;
};

inline RateEstimate entropy_rate_estimate(const EntropyCurve& c) {
  if (c.max_length() < 2) throw std::invalid_argument("entropy_rate_estimate: need max_length >= 2");
  RateEstimate out;
  for (std::size_t length = 1; length <= c.max_length(); ++length) out.increments.push_back(c(length) - c(length - 1));
  out.rate = out.increments.back();
  return out;
}

/// h = -(1/|Q|) sum_ij |U_ij|^2 log2 |U_ij|^2. Valid only for deterministic
/// generators, where each symbol selects a single transition.
inline double entropy_rate_closed_form(const QuantumGenerator& g, double threshold = kZeroThreshold) {
  if (!is_deterministic(g, threshold)) throw NotDeterministicError();
  double h = 0.0;
  for (Complex z : g.unitary().entries()) {
    const double p = std::norm(z);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h / static_cast<double>(g.dim());
}

struct ExcessEstimate {
  double value = 0.0;
  /// trace[L-1] = H(L) - h L, L = 1..max_length.
  std::vector<double> trace;
};

inline ExcessEstimate excess_entropy_estimate(const EntropyCurve& c, double rate) {
  if (c.max_length() < 2) throw std::invalid_argument("excess_entropy_estimate: need max_length >= 2");
  ExcessEstimate out;
  for (std::size_t length = 1; length <= c.max_length(); ++length)
    out.trace.push_back(c(length) - rate * static_cast<double>(length));
  out.value = out.trace.back();
  return out;
}

/// E = H(R) - R h, exact for a Markov process of order R.
inline double excess_entropy_markov(const WordDistribution& d, std::size_t order, double rate) {
  if (order == 0 || order > d.max_length()) throw std::out_of_range("excess_entropy_markov: order out of range");
  return block_entropy(d, order) - static_cast<double>(order) * rate;
}

namespace detail {

// Total-variation distance between Pr(. | a) and Pr(. | b).
inline double conditional_distance(const WordDistribution& d, const Word& a, const Word& b) {
  const double pa = d.probability(a);
  const double pb = d.probability(b);
  Word xa = a;
  Word xb = b;
  xa.push_back(0);
  xb.push_back(0);
  double tv = 0.0;
  for (SymbolIndex s = 0; s < d.alphabet_size(); ++s) {
    xa.back() = s;
    xb.back() = s;
    tv += std::abs(d.probability(xa) / pa - d.probability(xb) / pb);
  }
  return 0.5 * tv;
}

}  // namespace detail

/// Smallest R >= 1 such that conditioning on more than the last R symbols
/// never moves the next-symbol distribution by more than tol (total
/// variation). Contexts up to max_length - 1 are examined; zero-probability
/// contexts are skipped. Empty when no R up to max_length - 2 qualifies.
inline std::optional<std::size_t> estimate_markov_order(const WordDistribution& d, double tol = 1e-6,
                                                        double threshold = kZeroThreshold) {
  if (d.max_length() < 3) throw std::invalid_argument("estimate_markov_order: need max_length >= 3");
  for (std::size_t order = 1; order + 2 <= d.max_length(); ++order) {
    bool ok = true;
    for (std::size_t context = order + 1; ok && context + 1 <= d.max_length(); ++context) {
      for (const auto& [w, p] : d.at_length(context)) {
        if (p <= threshold) continue;
        Word tail(w.end() - static_cast<std::ptrdiff_t>(order), w.end());
        if (detail::conditional_distance(d, w, tail) > tol) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return order;
  }
  return std::nullopt;
}

struct InfoSummary {
  std::optional<double> h_mu_closed;
  double h_mu_estimate = 0.0;
  double E_estimate = 0.0;
  std::optional<double> E_markov;
  std::optional<std::size_t> markov_order;

  EntropyCurve curve;
  RateEstimate rate;
  ExcessEstimate excess;
};

/// Excess entropy uses the closed-form rate when the generator is
/// deterministic, otherwise the finite-length estimate.
inline InfoSummary summarize(const QuantumGenerator& g, const WordDistribution& d, double markov_tol = 1e-6) {
  InfoSummary s;
  s.curve = entropy_curve(d);
  s.rate = entropy_rate_estimate(s.curve);
  s.h_mu_estimate = s.rate.rate;
  if (is_deterministic(g)) s.h_mu_closed = entropy_rate_closed_form(g);
  const double h = s.h_mu_closed.value_or(s.h_mu_estimate);
  s.excess = excess_entropy_estimate(s.curve, h);
  s.E_estimate = s.excess.value;
  if (d.max_length() >= 3) s.markov_order = estimate_markov_order(d, markov_tol);
  if (s.markov_order) s.E_markov = excess_entropy_markov(d, *s.markov_order, h);
  return s;
}

}  // namespace qsofic

#endif  // QSOFIC_INFO_HPP

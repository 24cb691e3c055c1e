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

#include "qsofic/info.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "qsofic/presets.hpp"

using namespace qsofic;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

QuantumGenerator golden() { return spin1_preset(Spin1Observable::Jy2); }
QuantumGenerator even() { return spin1_preset(Spin1Observable::Jx2); }

QuantumGenerator trivial() {
  GeneratorSpec spec;
  spec.dim = 1;
  spec.alphabet = {"a"};
  spec.unitary = ComplexMatrix::identity(1);
  spec.projectors = {{"a", BasisSubset{{0}}}};
  return build_generator(spec);
}

QuantumGenerator two_state(ComplexMatrix u) {
  GeneratorSpec spec;
  spec.dim = 2;
  spec.alphabet = {"0", "1"};
  spec.unitary = std::move(u);
  spec.projectors = {{"0", BasisSubset{{0}}}, {"1", BasisSubset{{1}}}};
  return build_generator(spec);
}

// Fair coin: Hadamard evolution measured in the computational basis.
QuantumGenerator coin() { return two_state(ComplexMatrix::from_rows({{kR, kR}, {kR, -kR}})); }

WordDistribution distribution(const QuantumGenerator& g, std::size_t max_length) {
  return enumerate_words(g, stationary_ensemble(g), max_length);
}

// Even-process block entropies, frozen from an independent enumeration of
// the 3-state chain.
constexpr double kEvenH13 = 9.574545834054495;
constexpr double kEvenH14 = 10.244454981184349;
constexpr double kEvenH16 = 11.581375407619648;

}  // namespace

TEST(BlockEntropy, UniformBit) {
  auto d = distribution(coin(), 1);
  EXPECT_NEAR(block_entropy(d, 1), 1.0, 1e-15);
}

TEST(BlockEntropy, GoldenMean) {
  auto d = distribution(golden(), 2);
  const double h1 = -(1.0 / 3) * std::log2(1.0 / 3) - (2.0 / 3) * std::log2(2.0 / 3);
  EXPECT_NEAR(block_entropy(d, 1), h1, 1e-15);
  EXPECT_NEAR(block_entropy(d, 1), 0.9183, 1e-4);
  EXPECT_NEAR(block_entropy(d, 2), std::log2(3.0), 1e-15);
  EXPECT_THROW(block_entropy(d, 3), std::out_of_range);
  EXPECT_THROW(block_entropy(d, 0), std::out_of_range);
}

TEST(BlockEntropy, MatchesOracle) {
  auto dx = distribution(even(), 10);
  auto dy = distribution(golden(), 10);
  for (std::size_t L = 1; L <= 10; ++L) {
    EXPECT_NEAR(block_entropy(dx, L), oracle::block_entropy(oracle::even(), L), 1e-12);
    EXPECT_NEAR(block_entropy(dy, L), oracle::block_entropy(oracle::golden_mean(), L), 1e-12);
  }
}

TEST(EntropyRateEstimate, GoldenMeanIsExactFromLengthTwo) {
  auto est = entropy_rate_estimate(entropy_curve(distribution(golden(), 10)));
  EXPECT_NEAR(est.rate, 2.0 / 3.0, 1e-9);
  ASSERT_EQ(est.increments.size(), 10u);
  for (std::size_t L = 2; L <= 10; ++L) EXPECT_NEAR(est.increments[L - 1], 2.0 / 3.0, 1e-9);
}

// The finite-length increment at L = 14 is still 3.2e-3 above the limit 2/3;
// increments shrink monotonically toward the closed form.
TEST(EntropyRateEstimate, EvenConvergesTowardClosedForm) {
  auto est = entropy_rate_estimate(entropy_curve(distribution(even(), 14)));
  EXPECT_NEAR(est.rate, kEvenH14 - kEvenH13, 1e-9);
  EXPECT_NEAR(est.rate, 0.669909147, 1e-9);
  const double closed = entropy_rate_closed_form(even());
  double previous_gap = INFINITY;
  for (std::size_t L = 2; L <= 14; ++L) {
    const double gap = est.increments[L - 1] - closed;
    EXPECT_GT(gap, 0.0);
    EXPECT_LT(gap, previous_gap);
    previous_gap = gap;
  }
  EXPECT_LT(previous_gap, 5e-3);
}

TEST(EntropyRateEstimate, TrivialAndErrors) {
  EXPECT_EQ(entropy_rate_estimate(entropy_curve(distribution(trivial(), 4))).rate, 0.0);
  EXPECT_THROW(entropy_rate_estimate(entropy_curve(distribution(golden(), 1))), std::invalid_argument);
}

TEST(EntropyRateClosedForm, SpinPresets) {
  EXPECT_NEAR(entropy_rate_closed_form(golden()), 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(entropy_rate_closed_form(even()), 2.0 / 3.0, 1e-9);
}

TEST(EntropyRateClosedForm, PermutationUnitaryIsZero) {
  EXPECT_EQ(entropy_rate_closed_form(two_state(ComplexMatrix::from_rows({{0, 1}, {1, 0}}))), 0.0);
}

TEST(EntropyRateClosedForm, RefusesNondeterministic) {
  EXPECT_THROW(entropy_rate_closed_form(spin1_preset(Spin1Observable::Jz2)), NotDeterministicError);
}

TEST(ExcessEntropyEstimate, GoldenMean) {
  auto est = excess_entropy_estimate(entropy_curve(distribution(golden(), 10)), 2.0 / 3.0);
  EXPECT_NEAR(est.value, 0.2516, 1e-4);
  EXPECT_NEAR(est.value, oracle::block_entropy(oracle::golden_mean(), 10) - 20.0 / 3.0, 1e-9);
  EXPECT_EQ(est.trace.size(), 10u);
}

TEST(ExcessEntropyEstimate, EvenAtSixteen) {
  auto est = excess_entropy_estimate(entropy_curve(distribution(even(), 16)), 2.0 / 3.0);
  EXPECT_NEAR(est.value, kEvenH16 - 16.0 * 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(est.value, 0.914708741, 1e-9);
}

TEST(ExcessEntropyEstimate, Trivial) {
  EXPECT_EQ(excess_entropy_estimate(entropy_curve(distribution(trivial(), 3)), 0.0).value, 0.0);
}

TEST(ExcessEntropyMarkov, GoldenMean) {
  auto d = distribution(golden(), 4);
  const double h = 2.0 / 3.0;
  EXPECT_NEAR(excess_entropy_markov(d, 1, h), 0.2516, 1e-4);
  EXPECT_NEAR(excess_entropy_markov(d, 2, h), std::log2(3.0) - 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(excess_entropy_markov(d, 1, h), excess_entropy_markov(d, 2, h), 1e-6);
  EXPECT_THROW(excess_entropy_markov(d, 5, h), std::out_of_range);
  EXPECT_EQ(excess_entropy_markov(distribution(trivial(), 1), 1, 0.0), 0.0);
}

TEST(MarkovOrder, Examples) {
  EXPECT_EQ(estimate_markov_order(distribution(golden(), 10)), 1u);
  EXPECT_FALSE(estimate_markov_order(distribution(even(), 10)).has_value());
  EXPECT_EQ(estimate_markov_order(distribution(coin(), 5)), 1u);
  EXPECT_THROW(estimate_markov_order(distribution(golden(), 2)), std::invalid_argument);
}

TEST(MarkovOrder, GoldenMeanConditionalsByBruteForce) {
  // Pr(s | context) depends on the last symbol only, checked directly.
  auto d = distribution(golden(), 10);
  for (std::size_t L = 1; L < 10; ++L)
    for (const auto& [w, p] : d.at_length(L)) {
      Word ext = w;
      ext.push_back(0);
      const double cond0 = d.probability(ext) / p;
      EXPECT_NEAR(cond0, w.back() == 0 ? 0.0 : 0.5, 1e-12);
    }
}

TEST(EntropyCurve, ShapeInvariants) {
  for (auto g : {golden(), even(), spin1_preset(Spin1Observable::Jz2), coin()}) {
    auto c = entropy_curve(distribution(g, 12));
    for (std::size_t L = 1; L <= 12; ++L) {
      EXPECT_GE(c(L), 0.0);
      EXPECT_GE(c(L) + 1e-9, c(L - 1));
      if (L >= 2) {
        EXPECT_LE(c(L) - c(L - 1), c(L - 1) - c(L - 2) + 1e-9);
      }
    }
  }
}

TEST(EntropyCurve, ExcessTraceNonDecreasingAtTrueRate) {
  for (auto g : {golden(), even()}) {
    auto est = excess_entropy_estimate(entropy_curve(distribution(g, 14)), 2.0 / 3.0);
    for (std::size_t k = 1; k < est.trace.size(); ++k) EXPECT_GE(est.trace[k] + 1e-9, est.trace[k - 1]);
  }
}

TEST(Summarize, GoldenMean) {
  auto g = golden();
  auto s = summarize(g, distribution(g, 10));
  ASSERT_TRUE(s.h_mu_closed.has_value());
  EXPECT_NEAR(*s.h_mu_closed, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(s.E_estimate, 0.2516, 1e-4);
  EXPECT_EQ(s.markov_order, 1u);
  ASSERT_TRUE(s.E_markov.has_value());
  EXPECT_NEAR(*s.E_markov, 0.2516, 1e-4);
}

TEST(Summarize, NondeterministicFallsBackToEstimate) {
  auto g = spin1_preset(Spin1Observable::Jz2);
  auto s = summarize(g, distribution(g, 8));
  EXPECT_FALSE(s.h_mu_closed.has_value());
  EXPECT_NEAR(s.h_mu_estimate, 2.0 / 3.0, 1e-9);
  EXPECT_EQ(s.markov_order, 1u);
}

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

#ifndef QSOFIC_PRESETS_HPP
#define QSOFIC_PRESETS_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string_view>

#include "qsofic/generator.hpp"

namespace qsofic {

// Spin-1 particle in a magnetic field, measured along one axis.
//
// The evolution is a rotation about y by pi/4 followed by a rotation about x
// by pi/2. Measuring J_i^2 gives the two-outcome family P(0) = 1 - J_i^2
// ("spin component along i is zero") and P(1) = J_i^2. In the chosen spin
// representation every J_i^2 is diagonal, so each family is a basis subset.
enum class Spin1Observable { Jx2, Jy2, Jz2 };

struct PresetInfo {
  std::string_view name;
  Spin1Observable observable;
  std::string_view description;
};

inline constexpr std::array<PresetInfo, 3> kSpin1Presets{{
    {"jx2", Spin1Observable::Jx2, "spin-1, measure J_x^2: Even process (deterministic, strictly sofic)"},
    {"jy2", Spin1Observable::Jy2, "spin-1, measure J_y^2: Golden Mean process (deterministic, finite type)"},
    {"jz2", Spin1Observable::Jz2, "spin-1, measure J_z^2: Golden Mean language, nondeterministic presentation"},
}};

inline std::optional<Spin1Observable> parse_observable(std::string_view name) {
  for (const auto& p : kSpin1Presets)
    if (p.name == name) return p.observable;
  return std::nullopt;
}

inline ComplexMatrix spin1_unitary() {
  const double r = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::from_rows({
      {r, r, 0.0},
      {0.0, 0.0, -1.0},
      {-r, r, 0.0},
  });
}

inline GeneratorSpec spin1_spec(Spin1Observable observable) {
  // Basis state whose J_i^2 eigenvalue is 0.
  std::size_t zero_state = 0;
  switch (observable) {
    case Spin1Observable::Jx2: zero_state = 0; break;
    case Spin1Observable::Jy2: zero_state = 1; break;
    case Spin1Observable::Jz2: zero_state = 2; break;
  }
  BasisSubset p0{{zero_state}};
  BasisSubset p1;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != zero_state) p1.indices.push_back(i);

  GeneratorSpec spec;
  spec.dim = 3;
  spec.alphabet = {"0", "1"};
  spec.unitary = spin1_unitary();
  spec.projectors = {{"0", p0}, {"1", p1}};
  return spec;
}

inline QuantumGenerator spin1_preset(Spin1Observable observable) { return build_generator(spin1_spec(observable)); }

}  // namespace qsofic

#endif  // QSOFIC_PRESETS_HPP

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

#ifndef QSOFIC_QSOFIC_HPP
#define QSOFIC_QSOFIC_HPP

#include "qsofic/linalg.hpp"
#include "qsofic/generator.hpp"
#include "qsofic/presets.hpp"
#include "qsofic/language.hpp"
#include "qsofic/info.hpp"
#include "qsofic/sampler.hpp"
#include "qsofic/spec_io.hpp"
#include "qsofic/report.hpp"

#endif  // QSOFIC_QSOFIC_HPP

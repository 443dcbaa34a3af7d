// Copyright 2026 The qoverlap Authors
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

#pragma once

#include <array>
#include <vector>

#include "qoverlap/quantum_core.hpp"

// Builders for the named configurations used by the CLI, the tests and the
// acceptance suite.

namespace qoverlap::examples {

/// |+> = (|0> + |1>)/sqrt2 and |-> = (|0> - |1>)/sqrt2.
PureState plus();
PureState minus();

/// |0><0|, |+><+| and (|1><1| + |-><-|)/2 with integer weights.
std::vector<MixedPreparation> qubit_triple_with_mixture();

/// One uniform mixture per basis of `count` MUBs in dimension d.
std::vector<MixedPreparation> mub_mixtures(int d, int count);

/// Qubit states with Bloch vectors at planar angles 0, 2pi/3, 4pi/3 in the z-x plane.
std::array<PureState, 3> trine();

/// Qubit state with Bloch vector (sin t, 0, cos t).
PureState zx_state(double t);

}  // namespace qoverlap::examples

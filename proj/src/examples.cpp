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

#include "qoverlap/examples.hpp"

#include <cmath>
#include <numbers>

namespace qoverlap::examples {

PureState plus() {
    CVector v(2);
    v << 1.0, 1.0;
    return PureState::normalized(v);
}

PureState minus() {
    CVector v(2);
    v << 1.0, -1.0;
    return PureState::normalized(v);
}

std::vector<MixedPreparation> qubit_triple_with_mixture() {
    return {
        MixedPreparation::pure(PureState::basis(2, 0)),
        MixedPreparation::pure(plus()),
        MixedPreparation({PureState::basis(2, 1), minus()}, {1, 1}, 2),
    };
}

std::vector<MixedPreparation> mub_mixtures(int d, int count) {
    std::vector<MixedPreparation> out;
    for (auto &basis : mub_bases(d, count)) out.push_back(MixedPreparation::uniform(std::move(basis)));
    return out;
}

PureState zx_state(double t) {
    CVector v(2);
    v << std::cos(t / 2.0), std::sin(t / 2.0);
    return PureState::normalized(v);
}

std::array<PureState, 3> trine() {
    constexpr double third = 2.0 * std::numbers::pi / 3.0;
    return {zx_state(0.0), zx_state(third), zx_state(2.0 * third)};
}

}  // namespace qoverlap::examples

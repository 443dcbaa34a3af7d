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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qoverlap/config.hpp"
#include "qoverlap/quantum_core.hpp"

namespace qoverlap {

enum class Category {
    CertifiedFullyNonEpistemic,
    CertifiedNonEpistemic,
    NonMaximallyEpistemicWitness,
    Inconclusive,
    OrthogonalTrivial,
};

std::string_view to_string(Category c);
/// Inverse of to_string; nullopt for unknown names.
std::optional<Category> category_from_string(std::string_view name);

/// How a tuple's overlap was obtained.
enum class TupleMethod {
    PairClosedForm,
    QubitGeometry,
    Caves,
    Johnston,
    Sdp,
};

std::string_view to_string(TupleMethod m);
std::optional<TupleMethod> tuple_method_from_string(std::string_view name);

struct TupleCertificate {
    /// One pure-state index per preparation.
    std::vector<std::size_t> indices;
    bool antidist = false;
    double a_q = 0.0;
    /// Upper bound on the tuple's quantum overlap used in the sum.
    double overlap = 0.0;
    TupleMethod method = TupleMethod::Sdp;
    /// Set when a fast-path certificate was cross-checked by the SDP.
    bool sdp_confirmed = false;
};

struct ClassificationReport {
    double omega_q = 0.0;
    double omega_e_upper = 0.0;
    std::vector<TupleCertificate> tuple_certificates;
    Category category = Category::Inconclusive;
    /// Worst |alpha/beta - w| when the weights were rationalized; 0 for exact
    /// integer input.
    double weight_approximation_error = 0.0;
    std::vector<std::string> diagnostics;
};

struct ClassifyOptions {
    std::size_t tuple_cap = kDefaultTupleCap;
    /// Cross-check every fast-path certificate with the SDP.
    bool confirm_with_sdp = true;
    /// Worker threads for tuple evaluation; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Bounds the common epistemic overlap of `preps` by the decomposition bound
/// and compares it with their quantum overlap.
///
/// Never throws on solver trouble: failures produce an Inconclusive report
/// with diagnostics. Throws StructuralError on fewer than two preparations
/// or mixed dimensions.
ClassificationReport classify(std::span<const MixedPreparation> preps, const ClassifyOptions &options = {});

}  // namespace qoverlap

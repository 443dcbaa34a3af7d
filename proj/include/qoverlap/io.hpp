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

#include <json.hpp>

#include "qoverlap/antidist.hpp"
#include "qoverlap/classify.hpp"
#include "qoverlap/criteria.hpp"
#include "qoverlap/errors.hpp"
#include "qoverlap/ks_model.hpp"
#include "qoverlap/quantum_core.hpp"
#include "qoverlap/qubit_geometry.hpp"

// JSON encoding of the library types.
//
//   complex number     [re, im]
//   pure state         {"dim": d, "amplitudes": [[re, im], ...]}
//   density matrix     {"dim": d, "rows": [[[re, im], ...], ...]}
//   preparation        {"beta": b, "terms": [{"alpha": a, "state": <pure state>}, ...]}
//   povm               {"effects": [<rows>, ...]}
//
// Every floating-point number is rounded to 12 significant digits on output,
// so serialize(parse(serialize(x))) == serialize(x) byte for byte.

namespace qoverlap::io {

using Json = nlohmann::ordered_json;

/// Thrown for input that does not match the schema.
class FormatError : public StructuralError {
  public:
    using StructuralError::StructuralError;
    const char *kind() const noexcept override { return "format"; }
};

/// Amplitudes whose norm is within this distance of 1 are rescaled on input.
inline constexpr double kInputNormSlack = 1e-6;

/// x rounded to 12 significant digits.
double round12(double x);

Json to_json(Complex c);
Json to_json(const CMatrix &m);
Json to_json(const PureState &s);
Json to_json(const DensityMatrix &r);
Json to_json(const MixedPreparation &p);
Json to_json(const Povm &p);
Json to_json(const BlochVector &v);
Json to_json(const SdpResult &r);
Json to_json(const TupleCertificate &c);
Json to_json(const ClassificationReport &r);
Json to_json(const McEstimate &e);
Json to_json(const SWitnessResult &r);
Json to_json(const QubitAntidistPovm &p);
Json to_json(const std::vector<Basis> &bases);

Complex complex_from_json(const Json &j);
CMatrix matrix_from_json(const Json &rows);
PureState pure_from_json(const Json &j);
DensityMatrix density_from_json(const Json &j);
/// Accepts a pure state or a density matrix.
DensityMatrix state_from_json(const Json &j);
MixedPreparation preparation_from_json(const Json &j);
Povm povm_from_json(const Json &j);
SdpResult sdp_result_from_json(const Json &j);
ClassificationReport report_from_json(const Json &j);
McEstimate mc_estimate_from_json(const Json &j);
SWitnessResult s_witness_from_json(const Json &j);

/// The canonical text of a JSON value: two-space indent, trailing newline.
std::string dump(const Json &j);

}  // namespace qoverlap::io

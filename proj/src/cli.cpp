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

#include "qoverlap/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>

#include "qoverlap/examples.hpp"
#include "qoverlap/io.hpp"

namespace qoverlap::cli {

namespace {

using io::Json;

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw io::FormatError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw io::FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

// A list under `key`, or the document itself when it is an array.
const Json &list_field(const Json &doc, const char *key) {
    if (doc.is_array()) return doc;
    if (doc.is_object() && doc.contains(key) && doc[key].is_array()) return doc[key];
    throw io::FormatError(std::string("expected an array or an object with an array field '") + key + "'");
}

std::vector<DensityMatrix> read_states(const std::string &path) {
    const Json doc = read_json_file(path);
    std::vector<DensityMatrix> out;
    for (const auto &s : list_field(doc, "states")) out.push_back(io::state_from_json(s));
    return out;
}

std::vector<MixedPreparation> read_preparations(const std::string &path) {
    const Json doc = read_json_file(path);
    std::vector<MixedPreparation> out;
    for (const auto &p : list_field(doc, "preparations")) out.push_back(io::preparation_from_json(p));
    return out;
}

Json error_json(const std::string &kind, const std::string &message) {
    return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

// One expected-vs-computed line of an example report.
Json check(const std::string &quantity, double expected, double tolerance, double computed) {
    return Json{{"quantity", quantity},
                {"expected", io::round12(expected)},
                {"tolerance", io::round12(tolerance)},
                {"computed", io::round12(computed)},
                {"ok", std::abs(computed - expected) <= tolerance}};
}

Json check_label(const std::string &quantity, const std::string &expected, const std::string &computed) {
    return Json{{"quantity", quantity}, {"expected", expected}, {"computed", computed}, {"ok", expected == computed}};
}

Json finish_example(const std::string &name, Json checks, Json extra = Json::object()) {
    bool ok = true;
    for (const auto &c : checks) ok = ok && c["ok"].get<bool>();
    Json out{{"example", name}, {"checks", std::move(checks)}, {"all_ok", ok}};
    for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
    return out;
}

Json example_one(std::size_t samples, std::uint64_t seed) {
    const auto preps = examples::qubit_triple_with_mixture();
    std::vector<DensityMatrix> rhos;
    for (const auto &p : preps) rhos.push_back(p.density());
    const SdpResult sdp = antidist_sdp(rhos);
    const ClassificationReport report = classify(preps);
    const McEstimate ks = ks_overlap_mixed(preps, SphereSample(samples, seed));
    Json checks = Json::array();
    checks.push_back(check("a_q", 0.9613, 1e-3, sdp.a_q));
    checks.push_back(check("omega_q", 0.1161, 2e-3, report.omega_q));
    checks.push_back(check("omega_e_upper", 0.0, 1e-6, report.omega_e_upper));
    checks.push_back(check_label("category", "CertifiedNonEpistemic", std::string(to_string(report.category))));
    return finish_example("1", std::move(checks),
                          Json{{"report", io::to_json(report)},
                               {"ks_overlap_mixed", io::to_json(ks)},
                               {"samples", samples},
                               {"seed", seed}});
}

Json example_mub(const std::string &name, int d, int count) {
    const ClassificationReport report = classify(examples::mub_mixtures(d, count));
    Json checks = Json::array();
    checks.push_back(check("omega_q", 1.0, 1e-6, report.omega_q));
    checks.push_back(check("omega_e_upper", 0.0, 1e-6, report.omega_e_upper));
    checks.push_back(check_label("category", "CertifiedFullyNonEpistemic", std::string(to_string(report.category))));
    return finish_example(name, std::move(checks),
                          Json{{"dim", d}, {"bases", count}, {"tuples", report.tuple_certificates.size()},
                               {"category", std::string(to_string(report.category))},
                               {"diagnostics", report.diagnostics}});
}

Json example_theorem6(std::size_t samples, std::uint64_t seed) {
    const double floor = 2.0 - std::sqrt(2.0);
    const Theorem6Minimum m = theorem6_minimize(1e-4);
    const std::vector<MixedPreparation> preps = {
        MixedPreparation::uniform({PureState::basis(2, 0), PureState::basis(2, 1)}),
        MixedPreparation::uniform({examples::plus(), examples::minus()}),
    };
    const McEstimate ks = ks_overlap_mixed(preps, SphereSample(samples, seed));
    Json checks = Json::array();
    checks.push_back(check("grid_minimum", floor, 1e-6, m.value));
    checks.push_back(check("argmin_c1", 1.0 / std::sqrt(2.0), 1e-3, m.c1_abs));
    checks.push_back(check("argmin_c1_prime", 1.0 / std::sqrt(2.0), 1e-3, m.c1p_abs));
    checks.push_back(check("ks_overlap_zx_mixtures", floor, 3.0 * ks.std_error, ks.estimate));
    return finish_example("theorem6", std::move(checks),
                          Json{{"ks_overlap_mixed", io::to_json(ks)}, {"samples", samples}, {"seed", seed}});
}

Json example_trine(std::size_t samples, std::uint64_t seed) {
    const auto t = examples::trine();
    const QubitAntidistPovm povm = antidist_povm_qubit(t[0], t[1], t[2]);
    const std::vector<DensityMatrix> rhos = to_densities(t);
    const SdpResult sdp = antidist_sdp(rhos);
    const McEstimate ks = ks_overlap_pure(t, SphereSample(samples, seed));
    Json checks = Json::array();
    checks.push_back(check("geometric_verdict", 1.0, 0.0, qubit_triple_antidist(t[0], t[1], t[2]) ? 1.0 : 0.0));
    for (int k = 0; k < 3; ++k) checks.push_back(check("gamma_" + std::to_string(k + 1), 2.0 / 3.0, 1e-10, povm.gamma[k]));
    checks.push_back(check("a_q", 1.0, 1e-6, sdp.a_q));
    checks.push_back(check("ks_overlap", 0.0, 0.0, ks.estimate));
    return finish_example("trine", std::move(checks),
                          Json{{"povm", io::to_json(povm)},
                               {"max_bloch_angle", io::round12(max_bloch_angle(t))},
                               {"hemisphere_positivity", hemisphere_positivity(t)},
                               {"samples", samples},
                               {"seed", seed}});
}

SampleScheme parse_scheme(const std::string &s) {
    if (s == "uniform") return SampleScheme::UniformRandom;
    if (s == "stratified") return SampleScheme::Stratified;
    throw io::FormatError("unknown sampling scheme '" + s + "'");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Anti-distinguishability and epistemic-overlap toolkit", "qoverlap"};
    app.require_subcommand(1);

    std::function<Json()> action;
    std::string file;
    double tol = kTol.sdp_gap;
    std::size_t samples = kDefaultSphereSamples;
    std::uint64_t seed = 0;
    std::string scheme = "uniform";
    int dim = 0;
    int count = 0;
    long long n = 1;
    std::string which;
    std::string out_path;
    std::string example_name;
    std::size_t tuple_cap = kDefaultTupleCap;
    bool no_confirm = false;
    unsigned threads = 0;

    auto *antidist = app.add_subcommand("antidist", "Anti-distinguishability SDP for a list of states");
    antidist->add_option("file", file, "JSON file with {\"states\": [...]}")->required();
    antidist->add_option("--tol", tol, "duality-gap tolerance")->check(CLI::PositiveNumber);
    antidist->callback([&] {
        action = [&] {
            const auto states = read_states(file);
            const SdpResult r = antidist_sdp(states, tol);
            Json j = io::to_json(r);
            j["omega_q"] = io::round12(std::clamp(static_cast<double>(states.size()) * (1.0 - r.a_q), 0.0, 1.0));
            return j;
        };
    });

    auto *cls = app.add_subcommand("classify", "Classify a list of preparations");
    cls->add_option("file", file, "JSON file with {\"preparations\": [...]}")->required();
    cls->add_option("--tuple-cap", tuple_cap, "maximum number of pure-state tuples");
    cls->add_flag("--no-confirm", no_confirm, "skip SDP confirmation of fast-path certificates");
    cls->add_option("--threads", threads, "worker threads (0 = all cores)");
    cls->callback([&] {
        action = [&] {
            ClassifyOptions opts;
            opts.tuple_cap = tuple_cap;
            opts.confirm_with_sdp = !no_confirm;
            opts.threads = threads;
            return io::to_json(classify(read_preparations(file), opts));
        };
    });

    auto *ks = app.add_subcommand("ks-overlap", "Kochen-Specker common overlap by Monte Carlo");
    ks->add_option("file", file, "JSON file with {\"preparations\": [...]}")->required();
    ks->add_option("--samples", samples, "number of sphere points")->check(CLI::PositiveNumber);
    ks->add_option("--seed", seed, "generator seed");
    ks->add_option("--scheme", scheme, "uniform or stratified");
    ks->callback([&] {
        action = [&] {
            const auto preps = read_preparations(file);
            Json j = io::to_json(ks_overlap_mixed(preps, SphereSample(samples, seed, parse_scheme(scheme))));
            j["samples"] = samples;
            j["seed"] = seed;
            j["scheme"] = scheme;
            return j;
        };
    });

    auto *mub = app.add_subcommand("mub", "Mutually unbiased bases");
    mub->add_option("--dim", dim, "dimension (prime or 4)")->required();
    mub->add_option("--count", count, "number of bases")->required();
    mub->add_option("--out", out_path, "also write the bases to this file");
    mub->callback([&] {
        action = [&] {
            Json j{{"dim", dim}, {"count", count}, {"bases", io::to_json(mub_bases(dim, count))}};
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw io::FormatError("cannot write '" + out_path + "'");
                f << io::dump(j);
            }
            return j;
        };
    });

    auto *geo = app.add_subcommand("geometry", "Geometric anti-distinguishability of three qubit states");
    geo->add_option("file", file, "JSON file with {\"states\": [three pure qubit states]}")->required();
    geo->callback([&] {
        action = [&] {
            const Json doc = read_json_file(file);
            std::vector<PureState> ps;
            for (const auto &s : list_field(doc, "states")) ps.push_back(io::pure_from_json(s));
            if (ps.size() != 3) throw io::FormatError("geometry needs exactly three pure states");
            std::vector<BlochVector> bv;
            for (const auto &p : ps) bv.push_back(bloch_from_qubit(p));
            const bool verdict = qubit_triple_antidist(ps[0], ps[1], ps[2]);
            const auto witness = hemisphere_witness(bv);
            Json j{{"bloch_vectors", Json{io::to_json(bv[0]), io::to_json(bv[1]), io::to_json(bv[2])}},
                   {"great_circle", great_circle_test(bv[0], bv[1], bv[2])},
                   {"antidist", verdict},
                   {"hemisphere_witness", witness ? io::to_json(*witness) : Json(nullptr)}};
            j["povm"] = verdict ? io::to_json(antidist_povm_qubit(ps[0], ps[1], ps[2])) : Json(nullptr);
            return j;
        };
    });

    auto *bounds = app.add_subcommand("bounds", "Closed-form bounds");
    bounds->add_option("--which", which, "corollary5 | theorem7 | theorem8 | psi-ratio")
        ->required()
        ->check(CLI::IsMember({"corollary5", "theorem7", "theorem8", "psi-ratio"}));
    bounds->add_option("--dim", dim, "dimension")->required();
    bounds->add_option("--n", n, "number of preparations (theorem8)");
    bounds->callback([&] {
        action = [&] {
            double value = 0.0;
            if (which == "corollary5") value = corollary5_bound(dim);
            else if (which == "theorem7") value = theorem7_avg_ratio_bound(dim);
            else if (which == "theorem8") value = theorem8_bound(n, dim);
            else value = psi_epistemic_ratio_bound(dim);
            Json j{{"which", which}, {"dim", dim}};
            if (which == "theorem8") j["n"] = n;
            j["value"] = io::round12(value);
            return j;
        };
    });

    auto *sw = app.add_subcommand("s-witness", "Parity-oblivious witness");
    sw->add_option("file", file, "JSON file with {\"states\": [4], \"measurements\": [2]}")->required();
    sw->callback([&] {
        action = [&] {
            const Json doc = read_json_file(file);
            std::vector<DensityMatrix> states;
            for (const auto &s : list_field(doc, "states")) states.push_back(io::state_from_json(s));
            std::vector<Povm> ms;
            for (const auto &m : list_field(doc, "measurements")) ms.push_back(io::povm_from_json(m));
            return io::to_json(s_witness(states, ms));
        };
    });

    auto *ex = app.add_subcommand("example", "Reproduce a named example");
    ex->add_option("name", example_name, "1 | 2 | 3 | theorem6 | trine")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "theorem6", "trine"}));
    ex->add_option("--samples", samples, "sphere points for Monte Carlo parts")->check(CLI::PositiveNumber);
    ex->add_option("--seed", seed, "generator seed");
    ex->callback([&] {
        action = [&] {
            if (example_name == "1") return example_one(samples, seed);
            if (example_name == "2") return example_mub("2", 3, 4);
            if (example_name == "3") return example_mub("3", 5, 3);
            if (example_name == "theorem6") return example_theorem6(samples, seed);
            return example_trine(samples, seed);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        err << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        err << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        out << io::dump(error_json("usage", e.what()));
        return kExitBadInput;
    }

    try {
        out << io::dump(action());
        return kExitOk;
    } catch (const ConvergenceError &e) {
        Json j = error_json(e.kind(), e.what());
        j["error"]["best_primal"] = io::round12(e.best_primal());
        j["error"]["best_dual"] = io::round12(e.best_dual());
        out << io::dump(j);
        return kExitNoConvergence;
    } catch (const WitnessUndefined &e) {
        Json j = error_json(e.kind(), e.what());
        j["error"]["s"] = io::round12(e.s());
        out << io::dump(j);
        return kExitBadInput;
    } catch (const Error &e) {
        out << io::dump(error_json(e.kind(), e.what()));
        return kExitBadInput;
    } catch (const Json::exception &e) {
        out << io::dump(error_json("format", e.what()));
        return kExitBadInput;
    }
}

}  // namespace qoverlap::cli

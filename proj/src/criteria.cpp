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

#include "qoverlap/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qoverlap/antidist.hpp"
#include "qoverlap/errors.hpp"

namespace qoverlap {

namespace {

void require_prime_or_four(int d, const char *where) {
    if (d < 4 || !(d == 4 || is_prime(d))) {
        throw DomainError(std::string(where) + ": d must be 4 or a prime >= 5");
    }
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    unsigned __int128 r = static_cast<unsigned __int128>(a / g) * b;
    if (r > std::numeric_limits<std::uint64_t>::max()) throw RangeError("lcm of denominators overflows 64 bits");
    return static_cast<std::uint64_t>(r);
}

}  // namespace

Lemma1Result lemma1_check(const std::vector<std::vector<double>> &sets) {
    if (sets.empty()) throw DomainError("lemma1_check: no sets");
    std::vector<std::vector<double>> sorted(sets.size());
    std::vector<double> values;
    double lhs = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < sets.size(); ++k) {
        double sum = 0.0;
        for (double a : sets[k]) {
            if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("lemma1_check: entries must be finite and >= 0");
            sum += a;
            if (a > 0.0) values.push_back(a);
        }
        lhs = std::min(lhs, sum);
        sorted[k] = sets[k];
        std::sort(sorted[k].begin(), sorted[k].end());
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    // sum over tuples of min_k a = integral over t > 0 of prod_k #{i : a_{i|k} >= t},
    // a step function that changes only at the distinct entry values.
    double rhs = 0.0;
    double previous = 0.0;
    for (double v : values) {
        double count = 1.0;
        for (const auto &s : sorted) {
            count *= static_cast<double>(s.end() - std::lower_bound(s.begin(), s.end(), v));
            if (count == 0.0) break;
        }
        if (count == 0.0) break;
        rhs += (v - previous) * count;
        previous = v;
    }
    return {lhs, rhs, lhs <= rhs + kTol.lemma1};
}

Decomposition decompose(std::span<const MixedPreparation> preps, std::size_t tuple_cap) {
    if (preps.size() < 2) throw StructuralError("decompose: need at least two preparations");
    const int d = preps.front().dim();
    std::uint64_t l = 1;
    double tuples = 1.0;
    for (const auto &p : preps) {
        if (p.dim() != d) throw StructuralError("decompose: preparations have different dimensions");
        l = checked_lcm(l, p.beta());
        tuples *= static_cast<double>(p.size());
    }
    if (tuples > static_cast<double>(tuple_cap)) {
        throw RangeError("decompose: " + std::to_string(static_cast<long long>(tuples)) +
                         " tuples exceed the cap of " + std::to_string(tuple_cap));
    }

    // lcm^(n-1) / prod beta = prod_k (lcm / beta_k) / lcm, exact while the
    // integers fit in a double mantissa.
    Decomposition out;
    out.prefactor = 1.0;
    for (const auto &p : preps) out.prefactor *= static_cast<double>(l / p.beta());
    out.prefactor /= static_cast<double>(l);

    const std::size_t n = preps.size();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        double w = 1.0;
        for (std::size_t k = 0; k < n; ++k) w *= static_cast<double>(preps[k].alphas()[idx[k]]);
        if (w != 0.0) out.tuples.push_back({idx, w});
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < preps[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

double theorem1_bound(std::span<const MixedPreparation> preps, const TupleOverlap &tuple_overlap,
                      std::size_t tuple_cap) {
    Decomposition dec = decompose(preps, tuple_cap);
    std::vector<PureState> tuple;
    double sum = 0.0;
    for (const auto &t : dec.tuples) {
        tuple.clear();
        for (std::size_t k = 0; k < t.indices.size(); ++k) tuple.push_back(preps[k].pures()[t.indices[k]]);
        sum += t.weight * tuple_overlap(tuple);
    }
    return dec.prefactor * sum;
}

RationalizedPreparation rationalize_weights(std::vector<PureState> pures, const std::vector<double> &weights,
                                            std::uint64_t max_beta) {
    if (pures.size() != weights.size() || pures.empty()) {
        throw StructuralError("rationalize_weights: need one weight per state");
    }
    if (max_beta == 0) throw DomainError("rationalize_weights: max_beta must be positive");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw DomainError("rationalize_weights: weights must be non-negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw DomainError("rationalize_weights: weights must sum to 1");

    const std::size_t m = weights.size();
    std::vector<std::uint64_t> best_alpha;
    std::uint64_t best_beta = 0;
    double best_err = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> alpha(m);
    std::vector<std::size_t> order(m);
    for (std::uint64_t beta = 1; beta <= max_beta; ++beta) {
        // Largest-remainder apportionment of beta.
        std::uint64_t assigned = 0;
        for (std::size_t i = 0; i < m; ++i) {
            alpha[i] = static_cast<std::uint64_t>(std::floor(weights[i] * static_cast<double>(beta)));
            assigned += alpha[i];
        }
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return weights[a] * beta - alpha[a] > weights[b] * beta - alpha[b];
        });
        for (std::size_t j = 0; assigned < beta && j < m; ++j, ++assigned) ++alpha[order[j]];
        if (assigned != beta) continue;
        double err = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            err = std::max(err, std::abs(static_cast<double>(alpha[i]) / static_cast<double>(beta) - weights[i]));
        }
        if (err < best_err) {
            best_err = err;
            best_alpha = alpha;
            best_beta = beta;
        }
        if (err <= 1e-12) break;
    }
    return {MixedPreparation(std::move(pures), std::move(best_alpha), best_beta), best_err};
}

double johnston_threshold(std::size_t n) {
    if (n < 3) throw DomainError("johnston_threshold: need N >= 3");
    const double nn = static_cast<double>(n);
    return std::sqrt((nn - 2.0) / (nn - 1.0)) / std::sqrt(2.0);
}

bool johnston_criterion(std::span<const PureState> states) {
    const double threshold = johnston_threshold(states.size()) + kTol.johnston;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            if (overlap_abs(states[i], states[j]) > threshold) return false;
        }
    }
    return true;
}

bool caves_criterion(double x1, double x2, double x3) {
    for (double x : {x1, x2, x3}) {
        if (!(x >= -kTol.caves && x <= 1.0 + kTol.caves)) throw RangeError("caves_criterion: inputs must lie in [0, 1]");
    }
    x1 = std::clamp(x1, 0.0, 1.0);
    x2 = std::clamp(x2, 0.0, 1.0);
    x3 = std::clamp(x3, 0.0, 1.0);
    const double sum = x1 + x2 + x3;
    if (!(sum < 1.0 - kTol.caves)) return false;
    return (sum - 1.0) * (sum - 1.0) - 4.0 * x1 * x2 * x3 >= -kTol.caves;
}

bool caves_criterion(const PureState &a, const PureState &b, const PureState &c) {
    auto sq = [](double o) { return o * o; };
    return caves_criterion(sq(overlap_abs(a, b)), sq(overlap_abs(a, c)), sq(overlap_abs(b, c)));
}

double corollary5_bound(int d) {
    if (d < 2) throw DomainError("corollary5_bound: d must be >= 2");
    const double dd = d;
    return dd / (dd + std::sqrt(dd * (dd - 1.0)));
}

double theorem5_bound(const MixedPreparation &rho0, std::span<const MixedPreparation> rhos) {
    const int d = rho0.dim();
    auto check_uniform = [d](const MixedPreparation &p) {
        if (p.dim() != d) throw StructuralError("theorem5_bound: preparations have different dimensions");
        if (p.size() != static_cast<std::size_t>(d) || p.beta() != static_cast<std::uint64_t>(d) ||
            std::any_of(p.alphas().begin(), p.alphas().end(), [](std::uint64_t a) { return a != 1; })) {
            throw DomainError("theorem5_bound: every preparation must be a uniform mixture of d states");
        }
    };
    check_uniform(rho0);
    if (rhos.empty()) throw DomainError("theorem5_bound: need at least one preparation besides rho0");
    for (const auto &p : rhos) check_uniform(p);

    std::vector<const PureState *> others;
    for (const auto &p : rhos) {
        for (const auto &s : p.pures()) others.push_back(&s);
    }

    // Each unordered pair stands for two ordered pairs.
    double sum = 0.0;
    for (const auto &psi : rho0.pures()) {
        for (std::size_t p = 0; p < others.size(); ++p) {
            for (std::size_t q = p + 1; q < others.size(); ++q) {
                if (caves_criterion(psi, *others[p], *others[q])) continue;
                const std::vector<DensityMatrix> triple = {DensityMatrix::from_pure(psi),
                                                           DensityMatrix::from_pure(*others[p]),
                                                           DensityMatrix::from_pure(*others[q])};
                // 1 - A_Q = opt / 3 <= primal / 3.
                sum += 2.0 * antidist_sdp(triple).primal_value / 3.0;
            }
        }
    }
    return 1.0 + 3.0 / (2.0 * d) * sum;
}

double theorem7_avg_ratio_bound(int d) {
    require_prime_or_four(d, "theorem7_avg_ratio_bound");
    return 1.0 / d;
}

double theorem8_bound(long long n, int d) {
    if (d < 4) throw DomainError("theorem8_bound: d must be >= 4");
    if (n < 1) throw DomainError("theorem8_bound: n must be >= 1");
    const double dd = d;
    return 8.0 * std::pow(dd, 1.0 / (dd - 2.0)) / std::pow(static_cast<double>(n), (dd - 3.0) / (dd - 2.0));
}

double psi_epistemic_ratio_bound(int d) {
    require_prime_or_four(d, "psi_epistemic_ratio_bound");
    return 2.0 / d;
}

bool lewis_threshold(const PureState &psi, const PureState &phi, int d) {
    if (psi.dim() != d || phi.dim() != d) throw StructuralError("lewis_threshold: state dimensions differ from d");
    const double o = overlap_abs(psi, phi);
    return o * o > (d - 1.0) / d + kTol.lewis;
}

SWitnessResult s_witness(std::span<const DensityMatrix> states, std::span<const Povm> measurements) {
    if (states.size() != 4) throw StructuralError("s_witness: need four states ordered 00, 01, 10, 11");
    if (measurements.size() != 2) throw StructuralError("s_witness: need two measurements");
    const int d = states.front().dim();
    for (const auto &s : states) {
        if (s.dim() != d) throw StructuralError("s_witness: states have different dimensions");
    }
    for (const auto &m : measurements) {
        if (m.size() != 2) throw StructuralError("s_witness: measurements must be binary");
        if (m.dim() != d) throw StructuralError("s_witness: measurement dimension differs from the states");
    }

    double s = 0.0;
    for (int x0 = 0; x0 < 2; ++x0) {
        for (int x1 = 0; x1 < 2; ++x1) {
            const DensityMatrix &rho = states[2 * x0 + x1];
            s += measurements[0].probability(rho, x0) + measurements[1].probability(rho, x1);
        }
    }
    s /= 8.0;

    const DensityMatrix rho0(0.5 * (states[0].matrix() + states[3].matrix()));
    const DensityMatrix rho1(0.5 * (states[1].matrix() + states[2].matrix()));
    const double dq = distinguishability(rho0, rho1);
    if (dq >= 1.0 - kTol.witness_distinguishable) {
        throw WitnessUndefined("s_witness: the parity mixtures are perfectly distinguishable", s);
    }
    return {s, 2.0 * (1.0 - s) / (1.0 - dq)};
}

}  // namespace qoverlap

// Copyright 2026 The qsym Authors
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

#include "qsym/noise.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qsym {

void NoiseSpec::validate() const {
    if (!(isolated_error_prob >= 0.0 && isolated_error_prob <= 1.0)) {
        throw std::invalid_argument("isolated_error_prob must lie in [0, 1]");
    }
    if (!(drift_sigma >= 0.0) || !std::isfinite(drift_sigma)) {
        throw std::invalid_argument("drift_sigma must be non-negative");
    }
}

StateVector orthogonal_complement(const StateVector &ideal) {
    if (ideal.num_qubits() != 1) {
        throw std::invalid_argument("orthogonal flip is defined for single-qubit ideals");
    }
    return StateVector::qubit(-std::conj(ideal[1]), std::conj(ideal[0]));
}

OperatorMatrix orthogonal_flip_operator(const StateVector &ideal) {
    StateVector perp = orthogonal_complement(ideal);
    const Vector &i = ideal.amplitudes();
    const Vector &p = perp.amplitudes();
    Matrix u = p * i.adjoint() - i * p.adjoint();
    return OperatorMatrix(1, std::move(u), {false, true, false});
}

StateVector orthogonal_flip(const StateVector &s, size_t replica, const RegisterLayout &layout, const StateVector &ideal) {
    if (layout.bits_per_replica() != 1) {
        throw std::invalid_argument("orthogonal flip requires single-qubit replicas");
    }
    return apply(orthogonal_flip_operator(ideal), s, {layout.qubit_index(replica, 0)});
}

DriftResult random_z_drift(const StateVector &s, double sigma, Rng &rng, const std::vector<size_t> &qubits) {
    if (!(sigma >= 0.0)) {
        throw std::invalid_argument("drift sigma must be non-negative");
    }
    DriftResult out{s, {}};
    out.angles.reserve(qubits.size());
    std::normal_distribution<double> normal(0.0, 1.0);
    for (size_t q : qubits) {
        double theta = sigma * normal(rng);
        out.angles.push_back(theta);
        if (theta != 0.0) {
            out.state = apply(rz(theta), out.state, {q});
        }
    }
    return out;
}

DriftResult random_z_drift(const StateVector &s, double sigma, Rng &rng) {
    std::vector<size_t> all(s.num_qubits());
    std::iota(all.begin(), all.end(), 0);
    return random_z_drift(s, sigma, rng, all);
}

DriftResult random_axis_drift(const StateVector &s, double sigma, Rng &rng, const std::vector<size_t> &qubits) {
    if (!(sigma >= 0.0)) {
        throw std::invalid_argument("drift sigma must be non-negative");
    }
    DriftResult out{s, {}};
    std::normal_distribution<double> normal(0.0, 1.0);
    for (size_t q : qubits) {
        std::array<double, 3> axis{normal(rng), normal(rng), normal(rng)};
        double theta = sigma * normal(rng);
        out.angles.push_back(theta);
        if (theta != 0.0) {
            out.state = apply(axis_rotation(axis, theta), out.state, {q});
        }
    }
    return out;
}

ChannelResult step_channel(
    const StateVector &s,
    const NoiseSpec &spec,
    Rng &rng,
    const RegisterLayout &layout,
    const std::vector<StateVector> &ideals,
    const std::vector<bool> &active) {
    spec.validate();
    size_t r_count = layout.num_replicas();
    if (!active.empty() && active.size() != r_count) {
        throw std::invalid_argument("active mask must have one entry per replica");
    }
    auto is_active = [&](size_t r) { return active.empty() || active[r]; };

    ChannelResult out{s, {}};
    if (spec.isolated_error_prob > 0.0) {
        if (ideals.size() != r_count) {
            throw std::invalid_argument("one ideal state per replica is required");
        }
        for (size_t r = 0; r < r_count; r++) {
            if (!is_active(r)) {
                continue;
            }
            if (uniform_draw(rng) < spec.isolated_error_prob) {
                out.state = orthogonal_flip(out.state, r, layout, ideals[r]);
                out.events.flipped.push_back(r);
            }
        }
    }
    if (spec.drift_sigma > 0.0) {
        std::vector<size_t> qubits;
        for (size_t r = 0; r < r_count; r++) {
            if (is_active(r)) {
                for (size_t q : layout.replica_qubits(r)) {
                    qubits.push_back(q);
                }
            }
        }
        DriftResult d = spec.drift_axis == DriftAxis::z ? random_z_drift(out.state, spec.drift_sigma, rng, qubits)
                                                         : random_axis_drift(out.state, spec.drift_sigma, rng, qubits);
        out.state = std::move(d.state);
        out.events.angles = std::move(d.angles);
    }
    return out;
}

}  // namespace qsym

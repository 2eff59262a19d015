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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsym/random.hpp"
#include "qsym/state.hpp"

namespace qsym {

enum class DriftAxis { z, random };

struct NoiseSpec {
    /// Chance per replica per step of an orthogonal flip.
    double isolated_error_prob = 0.0;
    /// Std-dev (radians) of each qubit's drift angle.
    double drift_sigma = 0.0;
    DriftAxis drift_axis = DriftAxis::z;

    /// Throws std::invalid_argument when p is outside [0, 1] or sigma < 0.
    void validate() const;

    bool operator==(const NoiseSpec &) const = default;
};

/// Unitary sending |ideal> to |ideal_perp> and |ideal_perp> to -|ideal>,
/// with ideal_perp = (-conj(beta), conj(alpha)).
OperatorMatrix orthogonal_flip_operator(const StateVector &ideal);
StateVector orthogonal_complement(const StateVector &ideal);

/// Applies the orthogonal flip to a single-qubit replica.
StateVector orthogonal_flip(const StateVector &s, size_t replica, const RegisterLayout &layout, const StateVector &ideal);

struct DriftResult {
    StateVector state;
    /// One angle per drifted qubit, in the order they were drawn.
    std::vector<double> angles;
};

/// Draws theta_i ~ Normal(0, sigma^2) for each of `qubits` in order and
/// applies exp(-i theta_i sigma_z / 2).
DriftResult random_z_drift(const StateVector &s, double sigma, Rng &rng, const std::vector<size_t> &qubits);
/// Drifts every qubit of the register.
DriftResult random_z_drift(const StateVector &s, double sigma, Rng &rng);

/// Same as random_z_drift but about an axis drawn uniformly on the sphere
/// per qubit (three normal draws for the axis, then the angle).
DriftResult random_axis_drift(const StateVector &s, double sigma, Rng &rng, const std::vector<size_t> &qubits);

struct ChannelEvents {
    std::vector<size_t> flipped;
    std::vector<double> angles;
};

struct ChannelResult {
    StateVector state;
    ChannelEvents events;
};

/// One noisy logical step. When p > 0, each active replica in index order
/// takes one uniform draw and is flipped if it falls below p. When sigma > 0,
/// every qubit of every active replica then drifts. `active` may be empty,
/// meaning all replicas.
ChannelResult step_channel(
    const StateVector &s,
    const NoiseSpec &spec,
    Rng &rng,
    const RegisterLayout &layout,
    const std::vector<StateVector> &ideals,
    const std::vector<bool> &active = {});

}  // namespace qsym

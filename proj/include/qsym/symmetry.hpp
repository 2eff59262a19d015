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
#include <utility>
#include <vector>

#include "qsym/random.hpp"
#include "qsym/state.hpp"

namespace qsym {

/// Result of a two-outcome projective test.
struct MeasurementOutcome {
    /// Probability of the accept branch, <s|P|s>.
    double probability;
    bool accepted;
    /// Normalized state in the branch that was sampled.
    StateVector post_state;
};

/// Maps replica contents (c_0, ..., c_{R-1}) to (c_{perm^-1(0)}, ...): the
/// block held by replica r moves to replica perm[r].
OperatorMatrix permutation_operator(const std::vector<size_t> &perm, const RegisterLayout &layout);

/// (1/R!) * sum over all replica permutations.
OperatorMatrix symmetric_projector(const RegisterLayout &layout);

/// Shift C moving the block at position r to position r+1 (mod R).
OperatorMatrix cyclic_shift(const RegisterLayout &layout);

/// Projector onto the `eigenvalue` eigenspace of the cyclic shift,
/// (1/n) * sum_k (conj(eigenvalue) C)^k. The eigenvalue must be an n-th root
/// of unity; the default picks the shift-invariant subspace.
OperatorMatrix cyclic_projector(const RegisterLayout &layout, Complex eigenvalue = 1.0);

/// <s|P|s> for a projector acting on `targets`.
double accept_probability(const OperatorMatrix &projector, const StateVector &s, const std::vector<size_t> &targets);

/// Samples the two-outcome measurement {P, 1-P}. Consumes exactly one draw.
MeasurementOutcome project_measure(const OperatorMatrix &projector, const StateVector &s, Rng &rng);
MeasurementOutcome project_measure(
    const OperatorMatrix &projector, const StateVector &s, const std::vector<size_t> &targets, Rng &rng);

enum class PairMode {
    /// Exchange symmetry of the two whole L-qubit blocks.
    whole_block,
    /// Every homologous bit pair in its triplet, tested as one projector.
    bitwise,
    /// Per-bit triplet tests performed one after the other, stopping at the
    /// first rejection.
    bitwise_sequential,
};

/// Projector on 2L qubits ordered (block i bits, block j bits).
OperatorMatrix pair_projector(size_t bits_per_replica, PairMode mode);

/// Qubits of replica i followed by those of replica j.
std::vector<size_t> pair_targets(std::pair<size_t, size_t> pair, const RegisterLayout &layout);

MeasurementOutcome pairwise_symmetrize(
    const StateVector &s, std::pair<size_t, size_t> pair, const RegisterLayout &layout, PairMode mode, Rng &rng);

struct PairingSchedule {
    /// Each round holds disjoint pairs (i, j) with i < j.
    std::vector<std::vector<std::pair<size_t, size_t>>> rounds;
};

/// Circle-method round robin. A full cycle has R-1 rounds for even R and R
/// rounds for odd R (one replica idle per round); longer schedules repeat it.
PairingSchedule pairing_schedule(size_t num_replicas, size_t num_rounds);

}  // namespace qsym

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

#include "qsym/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qsym/errors.hpp"
#include "test_util.hpp"

using namespace qsym;
using qsym::testing::max_abs_diff;
using qsym::testing::numerical_rank;
using qsym::testing::random_state;

namespace {

/// Moves replica blocks directly on amplitude indices.
Vector permute_amplitudes(const Vector &amps, const std::vector<size_t> &perm, size_t L) {
    size_t R = perm.size();
    size_t n = R * L;
    Vector out = Vector::Zero(amps.size());
    for (size_t in = 0; in < static_cast<size_t>(amps.size()); in++) {
        size_t idx = 0;
        for (size_t r = 0; r < R; r++) {
            size_t block = (in >> ((R - 1 - r) * L)) & ((size_t{1} << L) - 1);
            idx |= block << ((R - 1 - perm[r]) * L);
        }
        (void)n;
        out[idx] = amps[in];
    }
    return out;
}

StateVector one_orthogonal(size_t R, const StateVector &good, const StateVector &bad) {
    StateVector s;
    for (size_t r = 0; r + 1 < R; r++) {
        s = tensor(s, good);
    }
    return tensor(s, bad);
}

}  // namespace

TEST(symmetry, permutation_operator_examples) {
    RegisterLayout layout(3, 1);
    OperatorMatrix id = permutation_operator({0, 1, 2}, layout);
    ASSERT_LT(max_abs_diff(id.matrix(), Matrix::Identity(8, 8)), 1e-15);

    OperatorMatrix swap = permutation_operator({1, 0}, RegisterLayout(2, 1));
    Vector out = swap.matrix() * StateVector::basis(2, 1).amplitudes();
    ASSERT_LT(max_abs_diff(out, StateVector::basis(2, 2).amplitudes()), 1e-15);

    ASSERT_THROW(permutation_operator({0, 0, 1}, layout), std::invalid_argument);
    ASSERT_THROW(permutation_operator({0, 1}, layout), std::invalid_argument);
}

TEST(symmetry, permutation_operator_matches_direct_permutation) {
    std::mt19937_64 rng(20);
    std::vector<size_t> p1{0, 1, 2};
    do {
        std::vector<size_t> p2{0, 1, 2};
        do {
            for (size_t L : {1, 2}) {
                RegisterLayout layout(3, L);
                StateVector s = random_state(3 * L, rng);
                Vector direct = permute_amplitudes(s.amplitudes(), p1, L);
                ASSERT_LT(max_abs_diff(permutation_operator(p1, layout).matrix() * s.amplitudes(), direct), 1e-12);

                // Applying p2 and then p1 moves block r to p1[p2[r]].
                std::vector<size_t> composed(3);
                for (size_t r = 0; r < 3; r++) {
                    composed[r] = p1[p2[r]];
                }
                Matrix product = permutation_operator(p1, layout).matrix() * permutation_operator(p2, layout).matrix();
                ASSERT_LT(max_abs_diff(permutation_operator(composed, layout).matrix() * s.amplitudes(), product * s.amplitudes()), 1e-12);
            }
        } while (std::next_permutation(p2.begin(), p2.end()));
    } while (std::next_permutation(p1.begin(), p1.end()));
}

TEST(symmetry, symmetric_projector_rank) {
    ASSERT_EQ(numerical_rank(symmetric_projector(RegisterLayout(2, 1)).matrix()), 3);
    ASSERT_EQ(numerical_rank(symmetric_projector(RegisterLayout(3, 1)).matrix()), 4);
    ASSERT_EQ(numerical_rank(symmetric_projector(RegisterLayout(2, 2)).matrix()), 10);
    ASSERT_EQ(numerical_rank(symmetric_projector(RegisterLayout(5, 1)).matrix()), 6);
    ASSERT_THROW(symmetric_projector(RegisterLayout(1, 3)), std::invalid_argument);
    ASSERT_THROW(symmetric_projector(RegisterLayout(4, 3)), SizeLimitError);
}

TEST(symmetry, symmetric_projector_is_projector_and_commutes) {
    for (auto [R, L] : std::vector<std::pair<size_t, size_t>>{{2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        RegisterLayout layout(R, L);
        OperatorMatrix p = symmetric_projector(layout);
        const Matrix &m = p.matrix();
        ASSERT_LT(max_abs_diff(m * m, m), 1e-10);
        ASSERT_LT(max_abs_diff(m, m.adjoint()), 1e-10);
        std::vector<size_t> perm(R);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            ASSERT_LE(commutator_norm(p, permutation_operator(perm, layout)), 1e-10);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST(symmetry, cyclic_projector) {
    OperatorMatrix p2 = cyclic_projector(RegisterLayout(2, 1));
    ASSERT_LT(max_abs_diff(p2.matrix(), symmetric_projector(RegisterLayout(2, 1)).matrix()), 1e-12);

    OperatorMatrix p5 = cyclic_projector(RegisterLayout(5, 1));
    ASSERT_EQ(numerical_rank(p5.matrix()), 8);
    const Matrix &m = p5.matrix();
    ASSERT_LT(max_abs_diff(m * m, m), 1e-10);
    ASSERT_LT(max_abs_diff(m, m.adjoint()), 1e-10);
    Vector zero = StateVector::basis(5, 0).amplitudes();
    ASSERT_LT(max_abs_diff(m * zero, zero), 1e-12);

    // Eigenspaces for all fifth roots of unity partition the space.
    Matrix total = Matrix::Zero(32, 32);
    for (int k = 0; k < 5; k++) {
        total += cyclic_projector(RegisterLayout(5, 1), std::polar(1.0, 2 * std::numbers::pi * k / 5)).matrix();
    }
    ASSERT_LT(max_abs_diff(total, Matrix::Identity(32, 32)), 1e-10);
    ASSERT_THROW(cyclic_projector(RegisterLayout(5, 1), Complex(0, 1)), std::invalid_argument);
}

TEST(symmetry, cyclic_shift_moves_blocks_forward) {
    RegisterLayout layout(3, 1);
    // |100> : replica 0 holds 1; after the shift replica 1 holds it.
    Vector out = cyclic_shift(layout).matrix() * StateVector::basis(3, 4).amplitudes();
    ASSERT_LT(max_abs_diff(out, StateVector::basis(3, 2).amplitudes()), 1e-15);
}

TEST(symmetry, project_measure_symmetric_input) {
    RegisterLayout layout(2, 1);
    OperatorMatrix p = symmetric_projector(layout);
    Rng rng(1);
    StateVector s = tensor(StateVector::qubit(0.6, 0.8), StateVector::qubit(0.6, 0.8));
    for (int rep = 0; rep < 20; rep++) {
        MeasurementOutcome m = project_measure(p, s, rng);
        ASSERT_TRUE(m.accepted);
        ASSERT_NEAR(m.probability, 1.0, 1e-12);
        ASSERT_LT(max_abs_diff(m.post_state.amplitudes(), s.amplitudes()), 1e-12);
    }
    ASSERT_THROW(project_measure(swap_gate(), s, rng), std::invalid_argument);
}

TEST(symmetry, project_measure_consumes_one_draw) {
    OperatorMatrix p = symmetric_projector(RegisterLayout(2, 1));
    StateVector s = tensor(StateVector::basis(1, 0), StateVector::basis(1, 1));
    Rng a(77);
    Rng b(77);
    project_measure(p, s, a);
    b();
    ASSERT_EQ(a(), b());
}

TEST(symmetry, orthogonal_pair_is_fifty_fifty) {
    OperatorMatrix p = symmetric_projector(RegisterLayout(2, 1));
    StateVector phi = StateVector::qubit(0.6, 0.8);
    StateVector chi = StateVector::qubit(-0.8, 0.6);
    ASSERT_NEAR(accept_probability(p, tensor(phi, chi), {0, 1}), 0.5, 1e-12);
}

TEST(symmetry, one_orthogonal_replica_accepts_with_one_over_r) {
    StateVector good = StateVector::qubit(0.6, 0.8);
    StateVector bad = StateVector::qubit(-0.8, 0.6);
    for (size_t R = 2; R <= 5; R++) {
        RegisterLayout layout(R, 1);
        std::vector<size_t> all(R);
        std::iota(all.begin(), all.end(), 0);
        double p = accept_probability(symmetric_projector(layout), one_orthogonal(R, good, bad), all);
        ASSERT_NEAR(p, 1.0 / static_cast<double>(R), 1e-12) << "R=" << R;
    }
}

TEST(symmetry, post_state_in_projector_range) {
    std::mt19937_64 gen(21);
    Rng rng(22);
    RegisterLayout layout(3, 1);
    OperatorMatrix p = symmetric_projector(layout);
    for (int rep = 0; rep < 50; rep++) {
        StateVector s = random_state(3, gen);
        MeasurementOutcome m = project_measure(p, s, rng);
        ASSERT_NEAR(m.post_state.norm(), 1.0, 1e-12);
        Vector inside = p.matrix() * m.post_state.amplitudes();
        if (m.accepted) {
            ASSERT_LE((m.post_state.amplitudes() - inside).norm(), 1e-10);
        } else {
            ASSERT_LE(inside.norm(), 1e-10);
        }
    }
}

TEST(symmetry, repeated_projection_is_idempotent) {
    std::mt19937_64 gen(23);
    Rng rng(24);
    OperatorMatrix p = symmetric_projector(RegisterLayout(2, 2));
    int accepted = 0;
    for (int rep = 0; rep < 30; rep++) {
        MeasurementOutcome first = project_measure(p, random_state(4, gen), rng);
        if (!first.accepted) {
            continue;
        }
        accepted++;
        MeasurementOutcome second = project_measure(p, first.post_state, rng);
        ASSERT_TRUE(second.accepted);
        ASSERT_NEAR(second.probability, 1.0, 1e-12);
        ASSERT_LT(max_abs_diff(second.post_state.amplitudes(), first.post_state.amplitudes()), 1e-12);
    }
    ASSERT_GT(accepted, 0);
}

TEST(symmetry, project_measure_on_subset) {
    // Symmetrize replicas 1 and 2 of a three-qubit register; qubit 0 untouched.
    OperatorMatrix p = symmetric_projector(RegisterLayout(2, 1));
    StateVector s = tensor(StateVector::basis(1, 1), tensor(StateVector::basis(1, 0), StateVector::basis(1, 1)));
    ASSERT_NEAR(accept_probability(p, s, {1, 2}), 0.5, 1e-12);
    ASSERT_NEAR(accept_probability(p, s, {0, 2}), 1.0, 1e-12);
}

TEST(symmetry, pairwise_identical_replicas) {
    RegisterLayout layout(2, 1);
    StateVector q = StateVector::qubit(0.6, 0.8);
    StateVector s = tensor(q, q);
    Rng rng(3);
    for (PairMode mode : {PairMode::whole_block, PairMode::bitwise, PairMode::bitwise_sequential}) {
        MeasurementOutcome m = pairwise_symmetrize(s, {0, 1}, layout, mode, rng);
        ASSERT_TRUE(m.accepted);
        ASSERT_NEAR(m.probability, 1.0, 1e-12);
        ASSERT_LT(max_abs_diff(m.post_state.amplitudes(), s.amplitudes()), 1e-12);
    }
}

TEST(symmetry, pairwise_error_sharing) {
    RegisterLayout layout(2, 1);
    StateVector phi = StateVector::qubit(0.6, 0.8);
    StateVector chi = StateVector::qubit(-0.8, 0.6);
    StateVector s = tensor(phi, chi);
    Rng rng(4);
    int accepted = 0;
    for (int rep = 0; rep < 40; rep++) {
        MeasurementOutcome m = pairwise_symmetrize(s, {0, 1}, layout, PairMode::whole_block, rng);
        ASSERT_NEAR(m.probability, 0.5, 1e-12);
        if (!m.accepted) {
            continue;
        }
        accepted++;
        DensityMatrix a = partial_trace(m.post_state, {0});
        DensityMatrix b = partial_trace(m.post_state, {1});
        ASSERT_LT(max_abs_diff(a.matrix(), b.matrix()), 1e-12);
        ASSERT_NEAR(fidelity(a, phi), 0.5, 1e-12);
    }
    ASSERT_GT(accepted, 0);
}

TEST(symmetry, bitwise_subspace_inside_whole_block) {
    Matrix whole = pair_projector(2, PairMode::whole_block).matrix();
    Matrix bitwise = pair_projector(2, PairMode::bitwise).matrix();
    ASSERT_EQ(numerical_rank(bitwise), 9);
    ASSERT_EQ(numerical_rank(whole), 10);
    ASSERT_LT(max_abs_diff(whole * bitwise, bitwise), 1e-12);

    // Singlet on bit 0 of both blocks and singlet on bit 1. Qubit order is
    // (block i bit 0, block i bit 1, block j bit 0, block j bit 1).
    StateVector singlets = tensor(StateVector::psi_minus(), StateVector::psi_minus());
    std::vector<size_t> perm{0, 2, 1, 3};
    Vector reordered = permute_amplitudes(singlets.amplitudes(), perm, 1);
    StateVector s(4, reordered);
    RegisterLayout layout(2, 2);
    ASSERT_NEAR(accept_probability(pair_projector(2, PairMode::whole_block), s, {0, 1, 2, 3}), 1.0, 1e-12);
    ASSERT_NEAR(accept_probability(pair_projector(2, PairMode::bitwise), s, {0, 1, 2, 3}), 0.0, 1e-12);
    Rng rng(5);
    ASSERT_FALSE(pairwise_symmetrize(s, {0, 1}, layout, PairMode::bitwise, rng).accepted);
    ASSERT_FALSE(pairwise_symmetrize(s, {0, 1}, layout, PairMode::bitwise_sequential, rng).accepted);
    ASSERT_TRUE(pairwise_symmetrize(s, {0, 1}, layout, PairMode::whole_block, rng).accepted);
}

TEST(symmetry, bitwise_sequential_matches_combined_statistics) {
    std::mt19937_64 gen(25);
    RegisterLayout layout(2, 2);
    for (int rep = 0; rep < 10; rep++) {
        StateVector s = random_state(4, gen);
        Rng rng(static_cast<uint64_t>(rep));
        MeasurementOutcome seq = pairwise_symmetrize(s, {0, 1}, layout, PairMode::bitwise_sequential, rng);
        double combined = accept_probability(pair_projector(2, PairMode::bitwise), s, {0, 1, 2, 3});
        ASSERT_NEAR(seq.probability, combined, 1e-12);
    }
}

TEST(symmetry, pair_targets) {
    RegisterLayout layout(3, 2);
    ASSERT_EQ(pair_targets({2, 0}, layout), (std::vector<size_t>{4, 5, 0, 1}));
    ASSERT_THROW(pair_targets({1, 1}, layout), std::invalid_argument);
}

TEST(symmetry, pairing_schedule) {
    PairingSchedule two = pairing_schedule(2, 4);
    ASSERT_EQ(two.rounds.size(), 4);
    for (const auto &round : two.rounds) {
        ASSERT_EQ(round, (std::vector<std::pair<size_t, size_t>>{{0, 1}}));
    }

    for (size_t R = 2; R <= 9; R++) {
        size_t cycle = R % 2 == 0 ? R - 1 : R;
        PairingSchedule s = pairing_schedule(R, cycle);
        std::set<std::pair<size_t, size_t>> pairs;
        for (const auto &round : s.rounds) {
            std::set<size_t> used;
            for (auto [i, j] : round) {
                ASSERT_LT(i, j);
                ASSERT_LT(j, R);
                ASSERT_TRUE(used.insert(i).second);
                ASSERT_TRUE(used.insert(j).second);
                ASSERT_TRUE(pairs.insert({i, j}).second);
            }
            ASSERT_EQ(round.size(), R / 2);
            ASSERT_EQ(used.size(), R - R % 2);
        }
        ASSERT_EQ(pairs.size(), R * (R - 1) / 2) << "R=" << R;
    }

    // A schedule longer than one cycle repeats it.
    PairingSchedule four = pairing_schedule(4, 7);
    ASSERT_EQ(four.rounds[0], four.rounds[3]);
    ASSERT_EQ(four.rounds[1], four.rounds[4]);
    ASSERT_THROW(pairing_schedule(1, 1), std::invalid_argument);
}

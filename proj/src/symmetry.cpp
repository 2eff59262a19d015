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
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

constexpr double PROBABILITY_SLACK = 1e-10;

void check_operator_size(const RegisterLayout &layout) {
    if (layout.num_qubits() > MAX_OPERATOR_QUBITS) {
        throw SizeLimitError(
            "register of " + std::to_string(layout.num_qubits()) + " qubits exceeds the dense operator ceiling");
    }
}

/// Basis index reached by moving each replica block r to position perm[r].
size_t permuted_index(size_t index, const std::vector<size_t> &perm, const RegisterLayout &layout) {
    size_t r_count = layout.num_replicas();
    size_t l = layout.bits_per_replica();
    size_t block_mask = (size_t{1} << l) - 1;
    size_t out = 0;
    for (size_t r = 0; r < r_count; r++) {
        size_t block = (index >> ((r_count - 1 - r) * l)) & block_mask;
        out |= block << ((r_count - 1 - perm[r]) * l);
    }
    return out;
}

void check_permutation(const std::vector<size_t> &perm, size_t n) {
    if (perm.size() != n) {
        throw std::invalid_argument("permutation length does not match replica count");
    }
    std::vector<bool> seen(n, false);
    for (size_t p : perm) {
        if (p >= n || seen[p]) {
            throw std::invalid_argument("invalid permutation");
        }
        seen[p] = true;
    }
}

MeasurementOutcome sample_branch(
    const OperatorMatrix &projector, const StateVector &s, const std::vector<size_t> &targets, Rng &rng) {
    if (!projector.structure().projector) {
        throw std::invalid_argument("project_measure requires a projector-flagged operator");
    }
    Vector accepted = apply_raw(projector, s.amplitudes(), s.num_qubits(), targets);
    double p = s.amplitudes().dot(accepted).real();
    if (p < -PROBABILITY_SLACK || p > 1.0 + PROBABILITY_SLACK) {
        throw std::domain_error("acceptance probability " + std::to_string(p) + " outside [0, 1]");
    }
    p = std::clamp(p, 0.0, 1.0);
    double u = uniform_draw(rng);
    bool accept = u < p;
    Vector branch = accept ? accepted : Vector(s.amplitudes() - accepted);
    return MeasurementOutcome{p, accept, StateVector::from_unnormalized(s.num_qubits(), std::move(branch))};
}

std::vector<size_t> all_qubits(size_t n) {
    std::vector<size_t> q(n);
    std::iota(q.begin(), q.end(), 0);
    return q;
}

}  // namespace

OperatorMatrix permutation_operator(const std::vector<size_t> &perm, const RegisterLayout &layout) {
    check_operator_size(layout);
    check_permutation(perm, layout.num_replicas());
    size_t dim = size_t{1} << layout.num_qubits();
    auto d = static_cast<Eigen::Index>(dim);
    Matrix m = Matrix::Zero(d, d);
    for (size_t in = 0; in < dim; in++) {
        m(static_cast<Eigen::Index>(permuted_index(in, perm, layout)), static_cast<Eigen::Index>(in)) = 1.0;
    }
    return OperatorMatrix(layout.num_qubits(), std::move(m), {false, true, false});
}

OperatorMatrix symmetric_projector(const RegisterLayout &layout) {
    if (layout.num_replicas() < 2) {
        throw std::invalid_argument("symmetric projector needs at least two replicas");
    }
    check_operator_size(layout);
    size_t dim = size_t{1} << layout.num_qubits();
    auto d = static_cast<Eigen::Index>(dim);
    Matrix m = Matrix::Zero(d, d);
    std::vector<size_t> perm(layout.num_replicas());
    std::iota(perm.begin(), perm.end(), 0);
    double count = 0;
    do {
        for (size_t in = 0; in < dim; in++) {
            m(static_cast<Eigen::Index>(permuted_index(in, perm, layout)), static_cast<Eigen::Index>(in)) += 1.0;
        }
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    m /= count;
    return OperatorMatrix(layout.num_qubits(), std::move(m), {true, false, true});
}

OperatorMatrix cyclic_shift(const RegisterLayout &layout) {
    size_t n = layout.num_replicas();
    std::vector<size_t> perm(n);
    for (size_t r = 0; r < n; r++) {
        perm[r] = (r + 1) % n;
    }
    return permutation_operator(perm, layout);
}

OperatorMatrix cyclic_projector(const RegisterLayout &layout, Complex eigenvalue) {
    size_t n = layout.num_replicas();
    if (n < 2) {
        throw std::invalid_argument("cyclic projector needs at least two positions");
    }
    if (std::abs(std::pow(eigenvalue, static_cast<double>(n)) - Complex{1.0}) > 1e-10) {
        throw std::invalid_argument("cyclic projector eigenvalue is not an n-th root of unity");
    }
    Matrix shift = cyclic_shift(layout).matrix() * std::conj(eigenvalue);
    auto d = shift.rows();
    Matrix term = Matrix::Identity(d, d);
    Matrix sum = Matrix::Zero(d, d);
    for (size_t k = 0; k < n; k++) {
        sum += term;
        term = shift * term;
    }
    sum /= static_cast<double>(n);
    return OperatorMatrix(layout.num_qubits(), std::move(sum), {true, false, true});
}

double accept_probability(const OperatorMatrix &projector, const StateVector &s, const std::vector<size_t> &targets) {
    Vector accepted = apply_raw(projector, s.amplitudes(), s.num_qubits(), targets);
    return s.amplitudes().dot(accepted).real();
}

MeasurementOutcome project_measure(const OperatorMatrix &projector, const StateVector &s, Rng &rng) {
    if (projector.num_qubits() != s.num_qubits()) {
        throw std::invalid_argument("projector and state sizes differ");
    }
    return sample_branch(projector, s, all_qubits(s.num_qubits()), rng);
}

MeasurementOutcome project_measure(
    const OperatorMatrix &projector, const StateVector &s, const std::vector<size_t> &targets, Rng &rng) {
    return sample_branch(projector, s, targets, rng);
}

OperatorMatrix pair_projector(size_t bits_per_replica, PairMode mode) {
    RegisterLayout pair_layout(2, bits_per_replica);
    if (mode == PairMode::whole_block) {
        return symmetric_projector(pair_layout);
    }
    check_operator_size(pair_layout);
    OperatorMatrix triplet = symmetric_projector(RegisterLayout(2, 1));
    size_t n = pair_layout.num_qubits();
    auto d = static_cast<Eigen::Index>(size_t{1} << n);
    Matrix product = Matrix::Identity(d, d);
    for (size_t b = 0; b < bits_per_replica; b++) {
        product = embed(triplet, {b, bits_per_replica + b}, n).matrix() * product;
    }
    return OperatorMatrix(n, std::move(product), {true, false, true});
}

std::vector<size_t> pair_targets(std::pair<size_t, size_t> pair, const RegisterLayout &layout) {
    if (pair.first == pair.second) {
        throw std::invalid_argument("a pair needs two distinct replicas");
    }
    std::vector<size_t> targets = layout.replica_qubits(pair.first);
    std::vector<size_t> second = layout.replica_qubits(pair.second);
    targets.insert(targets.end(), second.begin(), second.end());
    return targets;
}

MeasurementOutcome pairwise_symmetrize(
    const StateVector &s, std::pair<size_t, size_t> pair, const RegisterLayout &layout, PairMode mode, Rng &rng) {
    if (s.num_qubits() != layout.num_qubits()) {
        throw std::invalid_argument("state does not match register layout");
    }
    std::vector<size_t> targets = pair_targets(pair, layout);
    if (mode != PairMode::bitwise_sequential) {
        return project_measure(pair_projector(layout.bits_per_replica(), mode), s, targets, rng);
    }

    double total = accept_probability(pair_projector(layout.bits_per_replica(), PairMode::bitwise), s, targets);
    OperatorMatrix triplet = symmetric_projector(RegisterLayout(2, 1));
    StateVector current = s;
    for (size_t b = 0; b < layout.bits_per_replica(); b++) {
        std::vector<size_t> bit_pair{layout.qubit_index(pair.first, b), layout.qubit_index(pair.second, b)};
        MeasurementOutcome step = project_measure(triplet, current, bit_pair, rng);
        current = step.post_state;
        if (!step.accepted) {
            return MeasurementOutcome{total, false, current};
        }
    }
    return MeasurementOutcome{total, true, current};
}

PairingSchedule pairing_schedule(size_t num_replicas, size_t num_rounds) {
    if (num_replicas < 2) {
        throw std::invalid_argument("pairing schedule needs at least two replicas");
    }
    // Circle method: slot 0 is fixed, the rest rotate. With odd R a phantom
    // slot is added and whoever meets it sits out.
    size_t slots = num_replicas + (num_replicas % 2);
    size_t cycle = slots - 1;
    PairingSchedule schedule;
    schedule.rounds.reserve(num_rounds);
    for (size_t round = 0; round < num_rounds; round++) {
        size_t k = round % cycle;
        std::vector<size_t> order(slots);
        order[0] = 0;
        for (size_t i = 1; i < slots; i++) {
            order[i] = 1 + (i - 1 + k) % cycle;
        }
        std::vector<std::pair<size_t, size_t>> pairs;
        for (size_t i = 0; i < slots / 2; i++) {
            size_t a = order[i];
            size_t b = order[slots - 1 - i];
            if (a >= num_replicas || b >= num_replicas) {
                continue;
            }
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(pairs.begin(), pairs.end());
        schedule.rounds.push_back(std::move(pairs));
    }
    return schedule;
}

}  // namespace qsym

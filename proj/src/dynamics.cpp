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

#include "qsym/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

constexpr double REGIME_LIMIT = 0.1;

const double INV_SQRT2 = 1.0 / std::sqrt(2.0);

/// Spin operator S_alpha = sigma_alpha / 2 on `qubit` of an n-qubit register.
Matrix spin(const OperatorMatrix &pauli, size_t qubit, size_t num_qubits) {
    return embed(pauli, {qubit}, num_qubits).matrix() / 2.0;
}

}  // namespace

PenaltyStrength::PenaltyStrength(double omega) : omega_(omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("penalty strength must be a positive finite number");
    }
}

EpsEta eps_eta_decompose(double a, double b) {
    return EpsEta{(a + b) / 2.0, (a - b) / 2.0};
}

double BellCoefficients::norm() const {
    return std::sqrt(std::norm(phi_plus) + std::norm(phi_minus) + std::norm(psi_plus) + std::norm(psi_minus));
}

StateVector BellCoefficients::to_state() const {
    Vector v(4);
    v << INV_SQRT2 * (phi_plus + phi_minus), INV_SQRT2 * (psi_plus + psi_minus), INV_SQRT2 * (psi_plus - psi_minus),
        INV_SQRT2 * (phi_plus - phi_minus);
    return StateVector(2, std::move(v));
}

BellCoefficients bell_decompose(const StateVector &s) {
    if (s.num_qubits() != 2) {
        throw std::invalid_argument("bell_decompose needs a two-qubit state");
    }
    return BellCoefficients{
        INV_SQRT2 * (s[0] + s[3]),
        INV_SQRT2 * (s[0] - s[3]),
        INV_SQRT2 * (s[1] + s[2]),
        INV_SQRT2 * (s[1] - s[2]),
    };
}

double effective_coupling(double eta, PauliConvention convention) {
    return convention == PauliConvention::standard ? 2.0 * eta : eta;
}

OperatorMatrix pair_penalty_hamiltonian(PenaltyStrength omega, size_t qa, size_t qb, size_t num_qubits) {
    if (qa == qb) {
        throw std::invalid_argument("penalty needs two distinct qubits");
    }
    if (qa >= num_qubits || qb >= num_qubits) {
        throw std::out_of_range("penalty qubit out of range");
    }
    auto d = static_cast<Eigen::Index>(size_t{1} << num_qubits);
    Matrix j_squared = Matrix::Zero(d, d);
    for (const OperatorMatrix &p : {pauli_x(), pauli_y(), pauli_z()}) {
        Matrix j = spin(p, qa, num_qubits) + spin(p, qb, num_qubits);
        j_squared += j * j;
    }
    Matrix h = omega.value() * (Matrix::Identity(d, d) - j_squared / 2.0);
    return OperatorMatrix(num_qubits, std::move(h), {true, false, false});
}

OperatorMatrix singlet_projector_form(PenaltyStrength omega, size_t qa, size_t qb, size_t num_qubits) {
    auto d = static_cast<Eigen::Index>(size_t{1} << num_qubits);
    Matrix swap = embed(swap_gate(), {qa, qb}, num_qubits).matrix();
    Matrix h = omega.value() * (Matrix::Identity(d, d) - swap) / 2.0;
    return OperatorMatrix(num_qubits, std::move(h), {true, false, false});
}

OperatorMatrix drift_hamiltonian(const std::vector<double> &coefficients) {
    size_t n = coefficients.size();
    if (n > MAX_OPERATOR_QUBITS) {
        throw SizeLimitError("drift Hamiltonian exceeds the operator ceiling");
    }
    size_t dim = size_t{1} << n;
    auto d = static_cast<Eigen::Index>(dim);
    Matrix h = Matrix::Zero(d, d);
    for (size_t index = 0; index < dim; index++) {
        double e = 0;
        for (size_t q = 0; q < n; q++) {
            bool one = (index >> (n - 1 - q)) & 1;
            e += one ? -coefficients[q] : coefficients[q];
        }
        h(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = e;
    }
    return OperatorMatrix(n, std::move(h), {true, false, false});
}

OperatorMatrix differential_z() {
    return drift_hamiltonian({1.0, -1.0});
}

OperatorMatrix collective_z() {
    return drift_hamiltonian({1.0, 1.0});
}

OperatorMatrix effective_pair_hamiltonian(double eta, PenaltyStrength omega, PauliConvention convention) {
    double c = effective_coupling(eta, convention);
    Matrix h(2, 2);
    h << 0, c, c, omega.value();
    return OperatorMatrix(1, std::move(h), {true, false, false});
}

Matrix restrict_to_psi(const OperatorMatrix &h) {
    if (h.num_qubits() != 2) {
        throw std::invalid_argument("restrict_to_psi needs a two-qubit operator");
    }
    Matrix basis(4, 2);
    basis.col(0) = StateVector::psi_plus().amplitudes();
    basis.col(1) = StateVector::psi_minus().amplitudes();
    return basis.adjoint() * h.matrix() * basis;
}

PairEvolution analytic_pair_evolution(
    const BellCoefficients &initial, double eta, PenaltyStrength omega, double t, PauliConvention convention) {
    const Complex i{0, 1};
    double c = effective_coupling(eta, convention);
    double w = omega.value();
    BellCoefficients out = initial;
    out.psi_plus = initial.psi_plus * std::exp(i * c * c * t / w);
    out.psi_minus = initial.psi_minus + (c / w) * (std::exp(-i * w * t) - 1.0) * initial.psi_plus;
    double n = out.norm();
    out.phi_plus /= n;
    out.phi_minus /= n;
    out.psi_plus /= n;
    out.psi_minus /= n;
    return PairEvolution{out, std::abs(c) / w > REGIME_LIMIT};
}

OperatorMatrix composite_hamiltonian(
    const RegisterLayout &layout, PenaltyStrength omega, const std::vector<double> &drifts) {
    size_t n = layout.num_qubits();
    if (n > MAX_OPERATOR_QUBITS) {
        throw SizeLimitError("composite Hamiltonian exceeds the operator ceiling");
    }
    if (!drifts.empty() && drifts.size() != n) {
        throw std::invalid_argument("one drift coefficient per qubit is required");
    }
    auto d = static_cast<Eigen::Index>(size_t{1} << n);
    Matrix h = Matrix::Zero(d, d);
    for (size_t r = 0; r < layout.num_replicas(); r++) {
        for (size_t s = r + 1; s < layout.num_replicas(); s++) {
            for (size_t b = 0; b < layout.bits_per_replica(); b++) {
                h += singlet_projector_form(omega, layout.qubit_index(r, b), layout.qubit_index(s, b), n).matrix();
            }
        }
    }
    if (!drifts.empty()) {
        h += drift_hamiltonian(drifts).matrix();
    }
    return OperatorMatrix(n, std::move(h), {true, false, false});
}

}  // namespace qsym

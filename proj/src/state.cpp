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

#include "qsym/state.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

constexpr double DENSITY_TOL = 1e-12;
constexpr double DENSITY_EIGEN_TOL = 1e-10;

size_t dim_of(size_t num_qubits) {
    return size_t{1} << num_qubits;
}

Vector enforce_norm(Vector amplitudes) {
    double n = amplitudes.norm();
    double drift = std::abs(n - 1.0);
    if (drift > NORM_FAIL_TOL) {
        throw std::logic_error("state norm drifted to " + std::to_string(n));
    }
    if (drift > NORM_RENORMALIZE_TOL) {
        amplitudes /= n;
    }
    return amplitudes;
}

void check_targets(const std::vector<size_t> &targets, size_t num_qubits) {
    for (size_t k = 0; k < targets.size(); k++) {
        if (targets[k] >= num_qubits) {
            throw std::out_of_range("target qubit " + std::to_string(targets[k]) + " out of range");
        }
        for (size_t j = 0; j < k; j++) {
            if (targets[j] == targets[k]) {
                throw std::invalid_argument("duplicate target qubit " + std::to_string(targets[k]));
            }
        }
    }
}

/// Bit position (from the least significant end) of a qubit in an n-qubit label.
inline size_t bit_of(size_t qubit, size_t num_qubits) {
    return num_qubits - 1 - qubit;
}

/// For each local index of a k-qubit operator, the global offset it selects.
std::vector<size_t> local_offsets(const std::vector<size_t> &targets, size_t num_qubits) {
    size_t k = targets.size();
    std::vector<size_t> offsets(dim_of(k), 0);
    for (size_t local = 0; local < offsets.size(); local++) {
        size_t g = 0;
        for (size_t m = 0; m < k; m++) {
            if ((local >> (k - 1 - m)) & 1) {
                g |= size_t{1} << bit_of(targets[m], num_qubits);
            }
        }
        offsets[local] = g;
    }
    return offsets;
}

/// Splits every global index into (kept, traced) sub-indices.
void split_indices(
    const std::vector<size_t> &keep, size_t num_qubits, std::vector<size_t> &kept, std::vector<size_t> &traced) {
    size_t total = dim_of(num_qubits);
    kept.assign(total, 0);
    traced.assign(total, 0);
    std::vector<bool> is_kept(num_qubits, false);
    for (size_t q : keep) {
        is_kept[q] = true;
    }
    for (size_t g = 0; g < total; g++) {
        size_t a = 0;
        size_t b = 0;
        for (size_t q = 0; q < num_qubits; q++) {
            size_t bit = (g >> bit_of(q, num_qubits)) & 1;
            if (is_kept[q]) {
                a = (a << 1) | bit;
            } else {
                b = (b << 1) | bit;
            }
        }
        kept[g] = a;
        traced[g] = b;
    }
}

std::vector<size_t> normalized_keep(const std::vector<size_t> &keep, size_t num_qubits) {
    std::vector<size_t> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!sorted.empty() && sorted.back() >= num_qubits) {
        throw std::out_of_range("partial_trace: kept qubit out of range");
    }
    if (sorted.size() > MAX_OPERATOR_QUBITS) {
        throw SizeLimitError("partial_trace: reduced state exceeds density-matrix ceiling");
    }
    return sorted;
}

}  // namespace

StateVector::StateVector() : num_qubits_(0), amplitudes_(Vector::Ones(1)) {
}

StateVector::StateVector(size_t num_qubits, Vector amplitudes) : num_qubits_(num_qubits) {
    if (num_qubits > MAX_STATE_QUBITS) {
        throw SizeLimitError("state vector of " + std::to_string(num_qubits) + " qubits exceeds ceiling");
    }
    if (static_cast<size_t>(amplitudes.size()) != dim_of(num_qubits)) {
        throw std::invalid_argument("amplitude count does not match 2^num_qubits");
    }
    amplitudes_ = enforce_norm(std::move(amplitudes));
}

StateVector StateVector::basis(size_t num_qubits, uint64_t index) {
    if (num_qubits > MAX_STATE_QUBITS) {
        throw SizeLimitError("state vector exceeds ceiling");
    }
    if (index >= dim_of(num_qubits)) {
        throw std::out_of_range("basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_of(num_qubits)));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(num_qubits, std::move(v));
}

StateVector StateVector::from_unnormalized(size_t num_qubits, Vector amplitudes) {
    double n = amplitudes.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::domain_error("cannot normalize a zero or non-finite amplitude vector");
    }
    amplitudes /= n;
    return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::qubit(Complex alpha, Complex beta) {
    Vector v(2);
    v << alpha, beta;
    return StateVector(1, std::move(v));
}

StateVector StateVector::phi_plus() {
    const double h = 1.0 / std::sqrt(2.0);
    Vector v(4);
    v << h, 0, 0, h;
    return StateVector(2, v);
}

StateVector StateVector::phi_minus() {
    const double h = 1.0 / std::sqrt(2.0);
    Vector v(4);
    v << h, 0, 0, -h;
    return StateVector(2, v);
}

StateVector StateVector::psi_plus() {
    const double h = 1.0 / std::sqrt(2.0);
    Vector v(4);
    v << 0, h, h, 0;
    return StateVector(2, v);
}

StateVector StateVector::psi_minus() {
    const double h = 1.0 / std::sqrt(2.0);
    Vector v(4);
    v << 0, h, -h, 0;
    return StateVector(2, v);
}

OperatorMatrix::OperatorMatrix(size_t num_qubits, Matrix entries, Structure structure)
    : num_qubits_(num_qubits), entries_(std::move(entries)), structure_(structure) {
    if (num_qubits > MAX_OPERATOR_QUBITS) {
        throw SizeLimitError("operator on " + std::to_string(num_qubits) + " qubits exceeds ceiling");
    }
    auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    if (entries_.rows() != d || entries_.cols() != d) {
        throw std::invalid_argument("operator shape does not match 2^num_qubits");
    }
    if (structure_.projector) {
        structure_.hermitian = true;
    }
    if (structure_.hermitian && !is_hermitian()) {
        throw std::invalid_argument("operator declared hermitian is not");
    }
    if (structure_.unitary && !is_unitary()) {
        throw std::invalid_argument("operator declared unitary is not");
    }
    if (structure_.projector && !is_projector()) {
        throw std::invalid_argument("operator declared projector is not");
    }
}

bool OperatorMatrix::is_hermitian(double tol) const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool OperatorMatrix::is_unitary(double tol) const {
    Matrix p = entries_.adjoint() * entries_;
    p -= Matrix::Identity(entries_.rows(), entries_.cols());
    return p.cwiseAbs().maxCoeff() <= tol;
}

bool OperatorMatrix::is_projector(double tol) const {
    if (!is_hermitian(tol)) {
        return false;
    }
    Matrix sq = entries_ * entries_;
    return (sq - entries_).cwiseAbs().maxCoeff() <= tol;
}

DensityMatrix::DensityMatrix(Trusted, size_t num_qubits, Matrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
}

DensityMatrix::DensityMatrix(size_t num_qubits, Matrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
    if (num_qubits > MAX_OPERATOR_QUBITS) {
        throw SizeLimitError("density matrix exceeds ceiling");
    }
    auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    if (entries_.rows() != d || entries_.cols() != d) {
        throw std::invalid_argument("density matrix shape does not match 2^num_qubits");
    }
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > DENSITY_TOL) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(entries_.trace() - Complex{1.0}) > DENSITY_TOL) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -DENSITY_EIGEN_TOL) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &s) {
    if (s.num_qubits() > MAX_OPERATOR_QUBITS) {
        throw SizeLimitError("density matrix exceeds ceiling");
    }
    return DensityMatrix(Trusted{}, s.num_qubits(), s.amplitudes() * s.amplitudes().adjoint());
}

double DensityMatrix::purity() const {
    return (entries_ * entries_).trace().real();
}

RegisterLayout::RegisterLayout(size_t num_replicas, size_t bits_per_replica)
    : num_replicas_(num_replicas), bits_per_replica_(bits_per_replica) {
    if (num_replicas == 0 || bits_per_replica == 0) {
        throw std::invalid_argument("register layout needs at least one replica and one bit");
    }
}

size_t RegisterLayout::qubit_index(size_t replica, size_t bit) const {
    if (replica >= num_replicas_ || bit >= bits_per_replica_) {
        throw std::out_of_range("replica or bit index out of range");
    }
    return replica * bits_per_replica_ + bit;
}

std::vector<size_t> RegisterLayout::replica_qubits(size_t replica) const {
    std::vector<size_t> out;
    out.reserve(bits_per_replica_);
    for (size_t b = 0; b < bits_per_replica_; b++) {
        out.push_back(qubit_index(replica, b));
    }
    return out;
}

OperatorMatrix identity(size_t num_qubits) {
    auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    return OperatorMatrix(num_qubits, Matrix::Identity(d, d), {true, true, true});
}

OperatorMatrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return OperatorMatrix(1, m, {true, true, false});
}

OperatorMatrix pauli_y() {
    const Complex i{0, 1};
    Matrix m(2, 2);
    m << 0, -i, i, 0;
    return OperatorMatrix(1, m, {true, true, false});
}

OperatorMatrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return OperatorMatrix(1, m, {true, true, false});
}

OperatorMatrix swap_gate() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    return OperatorMatrix(2, m, {true, true, false});
}

OperatorMatrix hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    m << h, h, h, -h;
    return OperatorMatrix(1, m, {true, true, false});
}

OperatorMatrix rz(double theta) {
    const Complex i{0, 1};
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::exp(-i * theta / 2.0);
    m(1, 1) = std::exp(i * theta / 2.0);
    return OperatorMatrix(1, m, {false, true, false});
}

OperatorMatrix axis_rotation(const std::array<double, 3> &axis, double theta) {
    double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (!(len > 0.0)) {
        throw std::invalid_argument("rotation axis must be nonzero");
    }
    Matrix n_sigma = (axis[0] * pauli_x().matrix() + axis[1] * pauli_y().matrix() + axis[2] * pauli_z().matrix()) / len;
    const Complex i{0, 1};
    Matrix m = std::cos(theta / 2.0) * Matrix::Identity(2, 2) - i * std::sin(theta / 2.0) * n_sigma;
    return OperatorMatrix(1, m, {false, true, false});
}

OperatorMatrix kron(const OperatorMatrix &a, const OperatorMatrix &b) {
    const Matrix &x = a.matrix();
    const Matrix &y = b.matrix();
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index r = 0; r < x.rows(); r++) {
        for (Eigen::Index c = 0; c < x.cols(); c++) {
            out.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
        }
    }
    Structure s{
        a.structure().hermitian && b.structure().hermitian,
        a.structure().unitary && b.structure().unitary,
        a.structure().projector && b.structure().projector,
    };
    return OperatorMatrix(a.num_qubits() + b.num_qubits(), std::move(out), s);
}

OperatorMatrix embed(const OperatorMatrix &op, const std::vector<size_t> &targets, size_t num_qubits) {
    if (op.num_qubits() != targets.size()) {
        throw std::invalid_argument("operator arity does not match target count");
    }
    if (num_qubits > MAX_OPERATOR_QUBITS) {
        throw SizeLimitError("embedded operator exceeds ceiling");
    }
    check_targets(targets, num_qubits);
    std::vector<size_t> offsets = local_offsets(targets, num_qubits);
    size_t mask = 0;
    for (size_t o : offsets) {
        mask |= o;
    }
    auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
    Matrix out = Matrix::Zero(d, d);
    const Matrix &m = op.matrix();
    for (size_t base = 0; base < dim_of(num_qubits); base++) {
        if (base & mask) {
            continue;
        }
        for (size_t r = 0; r < offsets.size(); r++) {
            for (size_t c = 0; c < offsets.size(); c++) {
                out(static_cast<Eigen::Index>(base | offsets[r]), static_cast<Eigen::Index>(base | offsets[c])) =
                    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return OperatorMatrix(num_qubits, std::move(out), op.structure());
}

double commutator_norm(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("commutator of operators with different sizes");
    }
    return (a.matrix() * b.matrix() - b.matrix() * a.matrix()).norm();
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    const Vector &x = a.amplitudes();
    const Vector &y = b.amplitudes();
    Vector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); i++) {
        out.segment(i * y.size(), y.size()) = x[i] * y;
    }
    return StateVector(a.num_qubits() + b.num_qubits(), std::move(out));
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of states with different sizes");
    }
    return a.amplitudes().dot(b.amplitudes());
}

Vector apply_raw(const OperatorMatrix &op, const Vector &amplitudes, size_t num_qubits, const std::vector<size_t> &targets) {
    if (op.num_qubits() != targets.size()) {
        throw std::invalid_argument("operator arity does not match target count");
    }
    if (static_cast<size_t>(amplitudes.size()) != dim_of(num_qubits)) {
        throw std::invalid_argument("amplitude count does not match register size");
    }
    check_targets(targets, num_qubits);
    std::vector<size_t> offsets = local_offsets(targets, num_qubits);
    size_t mask = 0;
    for (size_t o : offsets) {
        mask |= o;
    }
    const Matrix &m = op.matrix();
    Vector out(amplitudes.size());
    Vector local(static_cast<Eigen::Index>(offsets.size()));
    for (size_t base = 0; base < dim_of(num_qubits); base++) {
        if (base & mask) {
            continue;
        }
        for (size_t k = 0; k < offsets.size(); k++) {
            local[static_cast<Eigen::Index>(k)] = amplitudes[static_cast<Eigen::Index>(base | offsets[k])];
        }
        Vector mapped = m * local;
        for (size_t k = 0; k < offsets.size(); k++) {
            out[static_cast<Eigen::Index>(base | offsets[k])] = mapped[static_cast<Eigen::Index>(k)];
        }
    }
    return out;
}

StateVector apply(const OperatorMatrix &op, const StateVector &s, const std::vector<size_t> &targets) {
    Vector out = apply_raw(op, s.amplitudes(), s.num_qubits(), targets);
    if (op.structure().unitary) {
        return StateVector(s.num_qubits(), std::move(out));
    }
    return StateVector::from_unnormalized(s.num_qubits(), std::move(out));
}

OperatorMatrix propagator(const OperatorMatrix &h, double t) {
    if (!h.is_hermitian()) {
        throw std::invalid_argument("evolve: Hamiltonian is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("evolve: eigendecomposition failed");
    }
    const Complex i{0, 1};
    Vector phases = (-i * t * solver.eigenvalues().cast<Complex>()).array().exp();
    const Matrix &v = solver.eigenvectors();
    Matrix u = v * phases.asDiagonal() * v.adjoint();
    // The constructor re-verifies U^dagger U = 1 to STRUCTURE_TOL.
    return OperatorMatrix(h.num_qubits(), std::move(u), {false, true, false});
}

StateVector evolve(const StateVector &s, const OperatorMatrix &h, double t) {
    if (h.num_qubits() != s.num_qubits()) {
        throw std::invalid_argument("evolve: Hamiltonian and state sizes differ");
    }
    if (t == 0.0) {
        if (!h.is_hermitian()) {
            throw std::invalid_argument("evolve: Hamiltonian is not Hermitian");
        }
        return s;
    }
    OperatorMatrix u = propagator(h, t);
    return StateVector(s.num_qubits(), u.matrix() * s.amplitudes());
}

DensityMatrix partial_trace(const StateVector &s, const std::vector<size_t> &keep) {
    std::vector<size_t> sorted = normalized_keep(keep, s.num_qubits());
    std::vector<size_t> kept;
    std::vector<size_t> traced;
    split_indices(sorted, s.num_qubits(), kept, traced);
    auto dk = static_cast<Eigen::Index>(dim_of(sorted.size()));
    auto dt = static_cast<Eigen::Index>(dim_of(s.num_qubits() - sorted.size()));
    Matrix m = Matrix::Zero(dk, dt);
    for (size_t g = 0; g < kept.size(); g++) {
        m(static_cast<Eigen::Index>(kept[g]), static_cast<Eigen::Index>(traced[g])) = s[g];
    }
    Matrix rho = m * m.adjoint();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityMatrix(DensityMatrix::Trusted{}, sorted.size(), std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<size_t> &keep) {
    std::vector<size_t> sorted = normalized_keep(keep, rho.num_qubits());
    std::vector<size_t> kept;
    std::vector<size_t> traced;
    split_indices(sorted, rho.num_qubits(), kept, traced);
    auto dk = static_cast<Eigen::Index>(dim_of(sorted.size()));
    Matrix out = Matrix::Zero(dk, dk);
    const Matrix &m = rho.matrix();
    for (size_t r = 0; r < kept.size(); r++) {
        for (size_t c = 0; c < kept.size(); c++) {
            if (traced[r] == traced[c]) {
                out(static_cast<Eigen::Index>(kept[r]), static_cast<Eigen::Index>(kept[c])) +=
                    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return DensityMatrix(DensityMatrix::Trusted{}, sorted.size(), std::move(out));
}

double fidelity(const DensityMatrix &rho, const StateVector &target) {
    if (rho.num_qubits() != target.num_qubits()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    double f = target.amplitudes().dot(rho.matrix() * target.amplitudes()).real();
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace qsym

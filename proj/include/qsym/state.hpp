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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsym {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr size_t MAX_STATE_QUBITS = 14;
inline constexpr size_t MAX_OPERATOR_QUBITS = 10;

/// Norm drift below this is float noise and is silently renormalized away.
inline constexpr double NORM_RENORMALIZE_TOL = 1e-12;
/// Norm drift above this indicates a logic error and throws.
inline constexpr double NORM_FAIL_TOL = 1e-6;
/// Tolerance used when checking declared operator structure.
inline constexpr double STRUCTURE_TOL = 1e-10;

/// Pure state of an n-qubit register.
///
/// Amplitudes are ordered big-endian: qubit 0 is the most significant bit of
/// the basis-state label, so |q0 q1 ... q_{n-1}> has index
/// q0*2^{n-1} + ... + q_{n-1}.
class StateVector {
   public:
    /// The empty (0-qubit) register, a single amplitude equal to 1.
    StateVector();

    /// Takes amplitudes that are already normalized up to float noise.
    /// Throws std::invalid_argument on length mismatch and std::logic_error if
    /// the norm is off by more than NORM_FAIL_TOL.
    StateVector(size_t num_qubits, Vector amplitudes);

    static StateVector basis(size_t num_qubits, uint64_t index);
    /// Normalizes an arbitrary nonzero amplitude vector.
    static StateVector from_unnormalized(size_t num_qubits, Vector amplitudes);
    /// Single qubit alpha|0> + beta|1>.
    static StateVector qubit(Complex alpha, Complex beta);

    static StateVector phi_plus();
    static StateVector phi_minus();
    static StateVector psi_plus();
    static StateVector psi_minus();

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return static_cast<size_t>(amplitudes_.size());
    }
    const Vector &amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](size_t index) const {
        return amplitudes_[static_cast<Eigen::Index>(index)];
    }
    double norm() const {
        return amplitudes_.norm();
    }

   private:
    size_t num_qubits_;
    Vector amplitudes_;
};

/// Declared structure of an operator. Projector implies hermitian.
struct Structure {
    bool hermitian = false;
    bool unitary = false;
    bool projector = false;
};

/// Dense 2^n x 2^n operator with re-checkable structure flags.
class OperatorMatrix {
   public:
    /// Throws std::invalid_argument if a declared flag does not hold within
    /// STRUCTURE_TOL, and SizeLimitError above MAX_OPERATOR_QUBITS.
    OperatorMatrix(size_t num_qubits, Matrix entries, Structure structure = {});

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return static_cast<size_t>(entries_.rows());
    }
    const Matrix &matrix() const {
        return entries_;
    }
    Structure structure() const {
        return structure_;
    }

    bool is_hermitian(double tol = STRUCTURE_TOL) const;
    bool is_unitary(double tol = STRUCTURE_TOL) const;
    bool is_projector(double tol = STRUCTURE_TOL) const;

   private:
    size_t num_qubits_;
    Matrix entries_;
    Structure structure_;
};

/// Mixed state, validated on construction: Hermitian and unit trace within
/// 1e-12, eigenvalues no lower than -1e-10.
class DensityMatrix {
   public:
    DensityMatrix(size_t num_qubits, Matrix entries);
    static DensityMatrix from_pure(const StateVector &s);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return static_cast<size_t>(entries_.rows());
    }
    const Matrix &matrix() const {
        return entries_;
    }
    double purity() const;

   private:
    struct Trusted {};
    DensityMatrix(Trusted, size_t num_qubits, Matrix entries);
    friend DensityMatrix partial_trace(const StateVector &, const std::vector<size_t> &);
    friend DensityMatrix partial_trace(const DensityMatrix &, const std::vector<size_t> &);

    size_t num_qubits_;
    Matrix entries_;
};

/// R replicas of an L-qubit computer laid out replica-major:
/// qubit_index(r, b) = r * L + b.
class RegisterLayout {
   public:
    RegisterLayout(size_t num_replicas, size_t bits_per_replica);

    size_t num_replicas() const {
        return num_replicas_;
    }
    size_t bits_per_replica() const {
        return bits_per_replica_;
    }
    size_t num_qubits() const {
        return num_replicas_ * bits_per_replica_;
    }
    size_t qubit_index(size_t replica, size_t bit) const;
    std::vector<size_t> replica_qubits(size_t replica) const;

   private:
    size_t num_replicas_;
    size_t bits_per_replica_;
};

// Standard gates. sigma_z|0> = +|0>.
OperatorMatrix identity(size_t num_qubits);
OperatorMatrix pauli_x();
OperatorMatrix pauli_y();
OperatorMatrix pauli_z();
OperatorMatrix swap_gate();
OperatorMatrix hadamard();
/// exp(-i theta sigma_z / 2).
OperatorMatrix rz(double theta);
/// exp(-i theta (n . sigma) / 2) for a unit axis n.
OperatorMatrix axis_rotation(const std::array<double, 3> &axis, double theta);

/// Kronecker product, a's qubits first.
OperatorMatrix kron(const OperatorMatrix &a, const OperatorMatrix &b);
/// Lifts a k-qubit operator onto `targets` of an n-qubit register.
OperatorMatrix embed(const OperatorMatrix &op, const std::vector<size_t> &targets, size_t num_qubits);
/// Frobenius norm of [a, b].
double commutator_norm(const OperatorMatrix &a, const OperatorMatrix &b);

StateVector tensor(const StateVector &a, const StateVector &b);
Complex inner(const StateVector &a, const StateVector &b);

/// Applies `op` to the ordered `targets` (targets[0] is the op's most
/// significant qubit) and identity elsewhere. Unitary-flagged operators must
/// preserve the norm; any other operator has its output renormalized and
/// throws std::domain_error if it annihilates the state.
StateVector apply(const OperatorMatrix &op, const StateVector &s, const std::vector<size_t> &targets);
/// Same as apply() but without normalization, for non-unitary operators such
/// as projectors whose output is renormalized by the caller.
Vector apply_raw(const OperatorMatrix &op, const Vector &amplitudes, size_t num_qubits, const std::vector<size_t> &targets);

/// exp(-i h t) computed through the eigendecomposition of h.
OperatorMatrix propagator(const OperatorMatrix &h, double t);
StateVector evolve(const StateVector &s, const OperatorMatrix &h, double t);

/// Reduced state on `keep` (treated as a set; result qubits in ascending
/// order). An empty `keep` yields the 0-qubit scalar 1.
DensityMatrix partial_trace(const StateVector &s, const std::vector<size_t> &keep);
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<size_t> &keep);

/// <target| rho |target>, clamped into [0, 1].
double fidelity(const DensityMatrix &rho, const StateVector &target);

}  // namespace qsym

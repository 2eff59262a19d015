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
#include <vector>

#include "qsym/state.hpp"

namespace qsym {

/// Strength of the singlet penalty. Must be positive.
class PenaltyStrength {
   public:
    explicit PenaltyStrength(double omega);
    double value() const {
        return omega_;
    }

   private:
    double omega_;
};

/// Collective (epsilon) and differential (eta) parts of a two-qubit z drift:
/// a = epsilon + eta, b = epsilon - eta.
struct EpsEta {
    double epsilon;
    double eta;

    double a() const {
        return epsilon + eta;
    }
    double b() const {
        return epsilon - eta;
    }
};

EpsEta eps_eta_decompose(double a, double b);

/// Coefficients in the orthonormal Bell basis
/// Phi+- = (|00> +- |11>)/sqrt2, Psi+- = (|01> +- |10>)/sqrt2.
struct BellCoefficients {
    Complex phi_plus;
    Complex phi_minus;
    Complex psi_plus;
    Complex psi_minus;

    double norm() const;
    StateVector to_state() const;
};

BellCoefficients bell_decompose(const StateVector &s);

/// How sigma_Az - sigma_Bz couples Psi+ and Psi-.
enum class PauliConvention {
    /// Standard Pauli matrices: (sigma_Az - sigma_Bz) Psi+- = 2 Psi-+, so the
    /// effective coupling is 2 * eta.
    standard,
    /// Coupling taken as eta itself.
    literal,
};

/// Off-diagonal element between Psi+ and Psi- produced by a differential drift eta.
double effective_coupling(double eta, PauliConvention convention = PauliConvention::standard);

/// Omega * (1 - J^2 / 2) on qubits (qa, qb) of an n-qubit register, with
/// J = (sigma_A + sigma_B) / 2. Zero on the triplet, Omega on the singlet.
OperatorMatrix pair_penalty_hamiltonian(PenaltyStrength omega, size_t qa, size_t qb, size_t num_qubits);

/// The same penalty written as Omega * (1 - SWAP) / 2.
OperatorMatrix singlet_projector_form(PenaltyStrength omega, size_t qa, size_t qb, size_t num_qubits);

/// sum_i a_i sigma_z^(i); one coefficient per qubit.
OperatorMatrix drift_hamiltonian(const std::vector<double> &coefficients);

/// sigma_Az - sigma_Bz on a two-qubit register.
OperatorMatrix differential_z();
/// sigma_Az + sigma_Bz on a two-qubit register.
OperatorMatrix collective_z();

/// [[0, c], [c, Omega]] on span{Psi+, Psi-}, c = effective_coupling(eta).
OperatorMatrix effective_pair_hamiltonian(
    double eta, PenaltyStrength omega, PauliConvention convention = PauliConvention::standard);

/// Restriction of a two-qubit operator to span{Psi+, Psi-}.
Matrix restrict_to_psi(const OperatorMatrix &h);

struct PairEvolution {
    BellCoefficients coefficients;
    /// Set when coupling / Omega > 0.1, where the second-order form is not
    /// expected to hold.
    bool out_of_regime;
};

/// Closed-form secular drift valid to O((c / Omega)^2), c the effective
/// coupling: Phi+- amplitudes are constant, Psi+ picks up the phase
/// exp(i c^2 t / Omega) and Psi- receives (c / Omega)(exp(-i Omega t) - 1)
/// times the initial Psi+ amplitude. Output is renormalized.
PairEvolution analytic_pair_evolution(
    const BellCoefficients &initial,
    double eta,
    PenaltyStrength omega,
    double t,
    PauliConvention convention = PauliConvention::standard);

/// Pair penalties on homologous bits of every replica pair plus the z drift
/// on every qubit. `drifts` is either empty or holds one entry per qubit.
OperatorMatrix composite_hamiltonian(
    const RegisterLayout &layout, PenaltyStrength omega, const std::vector<double> &drifts);

}  // namespace qsym

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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsym/random.hpp"
#include "qsym/state.hpp"
#include "qsym/symmetry.hpp"

namespace qsym::code5 {

inline constexpr size_t NUM_QUBITS = 5;
inline constexpr size_t NUM_GENERATORS = 4;

enum class Pauli : uint8_t { I, X, Y, Z };

/// Five-qubit Pauli operator with a phase i^phase_exponent.
class PauliString {
   public:
    PauliString() = default;
    PauliString(std::array<Pauli, NUM_QUBITS> letters, uint8_t phase_exponent = 0);

    /// Parses e.g. "XZZXI", "-XZZXI", "iIIIII", "-iZZZZZ".
    static PauliString parse(std::string_view text);
    static PauliString single(size_t qubit, Pauli letter);

    const std::array<Pauli, NUM_QUBITS> &letters() const {
        return letters_;
    }
    /// The phase is i^phase_exponent(), exponent in [0, 4).
    uint8_t phase_exponent() const {
        return phase_;
    }
    Complex phase() const;
    size_t weight() const;
    bool commutes_with(const PauliString &other) const;
    bool same_letters(const PauliString &other) const {
        return letters_ == other.letters_;
    }
    /// Moves the letter at position q to position (q + k) mod 5.
    PauliString shifted(size_t k) const;
    OperatorMatrix to_operator() const;
    std::string str() const;

    PauliString operator*(const PauliString &rhs) const;
    bool operator==(const PauliString &other) const = default;

   private:
    std::array<Pauli, NUM_QUBITS> letters_{};
    uint8_t phase_ = 0;
};

/// The stabilizer generated by XZZXI and its cyclic shifts ZZXIX, ZXIXZ,
/// XIXZZ.
class StabilizerGroup {
   public:
    StabilizerGroup();

    const std::array<PauliString, NUM_GENERATORS> &generators() const {
        return generators_;
    }
    /// All 16 products of generator subsets, with phases.
    std::vector<PauliString> elements() const;
    /// Whether `p` equals some group element up to phase.
    bool contains_up_to_phase(const PauliString &p) const;

   private:
    std::array<PauliString, NUM_GENERATORS> generators_;
};

const StabilizerGroup &stabilizer();

/// Bit k set when the error anticommutes with generator k. Printed with
/// generator 0 first.
struct Syndrome {
    uint8_t bits = 0;

    bool bit(size_t k) const {
        return (bits >> k) & 1;
    }
    std::string str() const;
    auto operator<=>(const Syndrome &) const = default;
};

Syndrome syndrome_of(const PauliString &error);

/// Zero syndrome maps to the identity; each nonzero syndrome to the unique
/// single-qubit Pauli producing it. Throws std::logic_error if the
/// 15-error / 15-syndrome correspondence fails.
const std::map<Syndrome, PauliString> &syndrome_table();

/// 16 rows "<syndrome> <correction>", syndromes ascending.
std::string format_syndrome_table();

struct Codewords {
    StateVector zero;
    StateVector one;
};

/// |0_L> is the normalized code projection of |00000> (real positive
/// |00000> amplitude); |1_L> = XXXXX |0_L>.
const Codewords &logical_codewords();

/// alpha |0_L> + beta |1_L>. Throws std::invalid_argument unless
/// |alpha|^2 + |beta|^2 = 1 within 1e-12.
StateVector encode(Complex alpha, Complex beta);

/// Logical amplitudes (<0_L|s>, <1_L|s>).
std::pair<Complex, Complex> decode(const StateVector &s);

struct CorrectionResult {
    StateVector state;
    Syndrome syndrome;
};

/// Projectively measures the four generators in order (one draw each), then
/// applies the table correction.
CorrectionResult measure_and_correct(const StateVector &s, Rng &rng);

/// Data qubits 0-4, ancillas 5-8 after the measurement-free correction
/// circuit: syndrome extraction into the ancillas, then the table correction
/// controlled on the ancilla register.
StateVector coherent_correct_with_ancillas(const StateVector &s);

/// coherent_correct_with_ancillas() with the ancillas traced out.
DensityMatrix coherent_correct(const StateVector &s);

/// Eigenvalue of the cyclic qubit shift on |0_L>.
Complex cyclic_eigenvalue();

/// Projector onto the cyclic-shift eigenspace holding the code space.
const OperatorMatrix &code_cyclic_projector();

MeasurementOutcome cyclic_symmetry_test(const StateVector &s, Rng &rng);

}  // namespace qsym::code5

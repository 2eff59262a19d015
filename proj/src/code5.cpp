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

#include "qsym/code5.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qsym::code5 {

namespace {

struct LetterProduct {
    Pauli letter;
    uint8_t phase;
};

LetterProduct multiply(Pauli a, Pauli b) {
    if (a == Pauli::I) {
        return {b, 0};
    }
    if (b == Pauli::I) {
        return {a, 0};
    }
    if (a == b) {
        return {Pauli::I, 0};
    }
    // XY = iZ, YZ = iX, ZX = iY; the reversed orders pick up -i.
    auto next = [](Pauli p) {
        switch (p) {
            case Pauli::X:
                return Pauli::Y;
            case Pauli::Y:
                return Pauli::Z;
            default:
                return Pauli::X;
        }
    };
    Pauli third = static_cast<Pauli>(6 - static_cast<int>(a) - static_cast<int>(b));
    return {third, next(a) == b ? uint8_t{1} : uint8_t{3}};
}

char letter_char(Pauli p) {
    return "IXYZ"[static_cast<int>(p)];
}

const OperatorMatrix &letter_matrix(Pauli p) {
    static const OperatorMatrix i = identity(1);
    static const OperatorMatrix x = pauli_x();
    static const OperatorMatrix y = pauli_y();
    static const OperatorMatrix z = pauli_z();
    switch (p) {
        case Pauli::X:
            return x;
        case Pauli::Y:
            return y;
        case Pauli::Z:
            return z;
        default:
            return i;
    }
}

std::vector<size_t> data_qubits() {
    std::vector<size_t> q(NUM_QUBITS);
    std::iota(q.begin(), q.end(), 0);
    return q;
}

OperatorMatrix plus_projector(const PauliString &g) {
    auto d = static_cast<Eigen::Index>(size_t{1} << NUM_QUBITS);
    Matrix p = (Matrix::Identity(d, d) + g.to_operator().matrix()) / 2.0;
    return OperatorMatrix(NUM_QUBITS, std::move(p), {true, false, true});
}

/// |0><0| (x) I + |1><1| (x) g, control first.
OperatorMatrix controlled(const PauliString &g) {
    auto d = static_cast<Eigen::Index>(size_t{1} << NUM_QUBITS);
    Matrix m = Matrix::Zero(2 * d, 2 * d);
    m.topLeftCorner(d, d) = Matrix::Identity(d, d);
    m.bottomRightCorner(d, d) = g.to_operator().matrix();
    return OperatorMatrix(NUM_QUBITS + 1, std::move(m), {false, true, false});
}

/// Table correction controlled on the ancilla register (qubits 5-8, the
/// ancilla of generator k at qubit 5 + k).
const OperatorMatrix &controlled_correction() {
    static const OperatorMatrix op = [] {
        constexpr size_t anc_dim = size_t{1} << NUM_GENERATORS;
        constexpr size_t data_dim = size_t{1} << NUM_QUBITS;
        auto d = static_cast<Eigen::Index>(anc_dim * data_dim);
        Matrix u = Matrix::Zero(d, d);
        for (size_t a = 0; a < anc_dim; a++) {
            Syndrome syn;
            for (size_t k = 0; k < NUM_GENERATORS; k++) {
                if ((a >> (NUM_GENERATORS - 1 - k)) & 1) {
                    syn.bits |= uint8_t(1u << k);
                }
            }
            Matrix c = syndrome_table().at(syn).to_operator().matrix();
            for (size_t r = 0; r < data_dim; r++) {
                for (size_t col = 0; col < data_dim; col++) {
                    u(static_cast<Eigen::Index>(r * anc_dim + a), static_cast<Eigen::Index>(col * anc_dim + a)) =
                        c(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col));
                }
            }
        }
        return OperatorMatrix(NUM_QUBITS + NUM_GENERATORS, std::move(u), {false, true, false});
    }();
    return op;
}

}  // namespace

PauliString::PauliString(std::array<Pauli, NUM_QUBITS> letters, uint8_t phase_exponent)
    : letters_(letters), phase_(phase_exponent % 4) {
}

PauliString PauliString::parse(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = uint8_t((phase + 1) % 4);
        text.remove_prefix(1);
    }
    if (text.size() != NUM_QUBITS) {
        throw std::invalid_argument("Pauli string must have 5 letters");
    }
    std::array<Pauli, NUM_QUBITS> letters{};
    for (size_t q = 0; q < NUM_QUBITS; q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                letters[q] = Pauli::I;
                break;
            case 'X':
                letters[q] = Pauli::X;
                break;
            case 'Y':
                letters[q] = Pauli::Y;
                break;
            case 'Z':
                letters[q] = Pauli::Z;
                break;
            default:
                throw std::invalid_argument("unknown Pauli letter");
        }
    }
    return PauliString(letters, phase);
}

PauliString PauliString::single(size_t qubit, Pauli letter) {
    if (qubit >= NUM_QUBITS) {
        throw std::out_of_range("qubit out of range");
    }
    std::array<Pauli, NUM_QUBITS> letters{};
    letters[qubit] = letter;
    return PauliString(letters);
}

Complex PauliString::phase() const {
    static constexpr std::array<Complex, 4> table{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
    return table[phase_];
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (Pauli p : letters_) {
        w += p != Pauli::I;
    }
    return w;
}

bool PauliString::commutes_with(const PauliString &other) const {
    size_t clashes = 0;
    for (size_t q = 0; q < NUM_QUBITS; q++) {
        Pauli a = letters_[q];
        Pauli b = other.letters_[q];
        clashes += a != Pauli::I && b != Pauli::I && a != b;
    }
    return clashes % 2 == 0;
}

PauliString PauliString::shifted(size_t k) const {
    std::array<Pauli, NUM_QUBITS> out{};
    for (size_t q = 0; q < NUM_QUBITS; q++) {
        out[(q + k) % NUM_QUBITS] = letters_[q];
    }
    return PauliString(out, phase_);
}

OperatorMatrix PauliString::to_operator() const {
    OperatorMatrix m = letter_matrix(letters_[0]);
    for (size_t q = 1; q < NUM_QUBITS; q++) {
        m = kron(m, letter_matrix(letters_[q]));
    }
    bool real_phase = phase_ % 2 == 0;
    return OperatorMatrix(NUM_QUBITS, phase() * m.matrix(), {real_phase, true, false});
}

std::string PauliString::str() const {
    static constexpr std::array<const char *, 4> prefix{"+", "+i", "-", "-i"};
    std::string out = prefix[phase_];
    for (Pauli p : letters_) {
        out.push_back(letter_char(p));
    }
    return out;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    std::array<Pauli, NUM_QUBITS> out{};
    unsigned phase = phase_ + rhs.phase_;
    for (size_t q = 0; q < NUM_QUBITS; q++) {
        LetterProduct p = multiply(letters_[q], rhs.letters_[q]);
        out[q] = p.letter;
        phase += p.phase;
    }
    return PauliString(out, uint8_t(phase % 4));
}

StabilizerGroup::StabilizerGroup() {
    PauliString base = PauliString::parse("XZZXI");
    // Left rotations of XZZXI: ZZXIX, ZXIXZ, XIXZZ.
    for (size_t k = 0; k < NUM_GENERATORS; k++) {
        generators_[k] = base.shifted(NUM_QUBITS - k);
    }
}

std::vector<PauliString> StabilizerGroup::elements() const {
    std::vector<PauliString> out;
    for (unsigned mask = 0; mask < (1u << NUM_GENERATORS); mask++) {
        PauliString p;
        for (size_t k = 0; k < NUM_GENERATORS; k++) {
            if ((mask >> k) & 1) {
                p = p * generators_[k];
            }
        }
        out.push_back(p);
    }
    return out;
}

bool StabilizerGroup::contains_up_to_phase(const PauliString &p) const {
    for (const PauliString &e : elements()) {
        if (e.same_letters(p)) {
            return true;
        }
    }
    return false;
}

const StabilizerGroup &stabilizer() {
    static const StabilizerGroup group;
    return group;
}

std::string Syndrome::str() const {
    std::string out;
    for (size_t k = 0; k < NUM_GENERATORS; k++) {
        out.push_back(bit(k) ? '1' : '0');
    }
    return out;
}

Syndrome syndrome_of(const PauliString &error) {
    Syndrome s;
    const auto &gens = stabilizer().generators();
    for (size_t k = 0; k < NUM_GENERATORS; k++) {
        if (!error.commutes_with(gens[k])) {
            s.bits |= uint8_t(1u << k);
        }
    }
    return s;
}

const std::map<Syndrome, PauliString> &syndrome_table() {
    static const std::map<Syndrome, PauliString> table = [] {
        std::map<Syndrome, PauliString> t;
        t.emplace(Syndrome{}, PauliString{});
        for (size_t q = 0; q < NUM_QUBITS; q++) {
            for (Pauli letter : {Pauli::X, Pauli::Y, Pauli::Z}) {
                PauliString e = PauliString::single(q, letter);
                Syndrome s = syndrome_of(e);
                if (s.bits == 0) {
                    throw std::logic_error("single-qubit error " + e.str() + " is undetectable");
                }
                if (!t.emplace(s, e).second) {
                    throw std::logic_error("syndrome " + s.str() + " is shared by two single-qubit errors");
                }
            }
        }
        if (t.size() != (size_t{1} << NUM_GENERATORS)) {
            throw std::logic_error("syndrome table is incomplete");
        }
        return t;
    }();
    return table;
}

std::string format_syndrome_table() {
    std::string out;
    for (const auto &[syndrome, correction] : syndrome_table()) {
        std::string letters = correction.str().substr(1);
        out += syndrome.str() + " " + letters + "\n";
    }
    return out;
}

const Codewords &logical_codewords() {
    static const Codewords words = [] {
        auto d = static_cast<Eigen::Index>(size_t{1} << NUM_QUBITS);
        Matrix code = Matrix::Identity(d, d);
        for (const PauliString &g : stabilizer().generators()) {
            code = plus_projector(g).matrix() * code;
        }
        Vector zero = code.col(0);
        zero *= std::polar(1.0, -std::arg(zero[0]));
        StateVector zero_l = StateVector::from_unnormalized(NUM_QUBITS, std::move(zero));
        PauliString all_x = PauliString::parse("XXXXX");
        StateVector one_l = apply(all_x.to_operator(), zero_l, data_qubits());
        return Codewords{zero_l, one_l};
    }();
    return words;
}

StateVector encode(Complex alpha, Complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
        throw std::invalid_argument("encode: |alpha|^2 + |beta|^2 must equal 1");
    }
    const Codewords &w = logical_codewords();
    return StateVector(NUM_QUBITS, alpha * w.zero.amplitudes() + beta * w.one.amplitudes());
}

std::pair<Complex, Complex> decode(const StateVector &s) {
    const Codewords &w = logical_codewords();
    return {inner(w.zero, s), inner(w.one, s)};
}

CorrectionResult measure_and_correct(const StateVector &s, Rng &rng) {
    if (s.num_qubits() != NUM_QUBITS) {
        throw std::invalid_argument("measure_and_correct needs a 5-qubit state");
    }
    static const std::array<OperatorMatrix, NUM_GENERATORS> projectors = [] {
        const auto &g = stabilizer().generators();
        return std::array<OperatorMatrix, NUM_GENERATORS>{
            plus_projector(g[0]), plus_projector(g[1]), plus_projector(g[2]), plus_projector(g[3])};
    }();
    StateVector current = s;
    Syndrome syndrome;
    for (size_t k = 0; k < NUM_GENERATORS; k++) {
        MeasurementOutcome m = project_measure(projectors[k], current, rng);
        current = m.post_state;
        if (!m.accepted) {
            syndrome.bits |= uint8_t(1u << k);
        }
    }
    const PauliString &correction = syndrome_table().at(syndrome);
    return CorrectionResult{apply(correction.to_operator(), current, data_qubits()), syndrome};
}

StateVector coherent_correct_with_ancillas(const StateVector &s) {
    if (s.num_qubits() != NUM_QUBITS) {
        throw std::invalid_argument("coherent_correct needs a 5-qubit state");
    }
    StateVector state = tensor(s, StateVector::basis(NUM_GENERATORS, 0));
    const auto &gens = stabilizer().generators();
    OperatorMatrix h = hadamard();
    for (size_t k = 0; k < NUM_GENERATORS; k++) {
        size_t ancilla = NUM_QUBITS + k;
        std::vector<size_t> targets{ancilla};
        for (size_t q = 0; q < NUM_QUBITS; q++) {
            targets.push_back(q);
        }
        state = apply(h, state, {ancilla});
        state = apply(controlled(gens[k]), state, targets);
        state = apply(h, state, {ancilla});
    }
    std::vector<size_t> all(NUM_QUBITS + NUM_GENERATORS);
    std::iota(all.begin(), all.end(), 0);
    return apply(controlled_correction(), state, all);
}

DensityMatrix coherent_correct(const StateVector &s) {
    return partial_trace(coherent_correct_with_ancillas(s), data_qubits());
}

Complex cyclic_eigenvalue() {
    static const Complex lambda = [] {
        RegisterLayout positions(NUM_QUBITS, 1);
        OperatorMatrix shift = cyclic_shift(positions);
        const Codewords &w = logical_codewords();
        Complex l0 = inner(w.zero, apply(shift, w.zero, data_qubits()));
        Complex l1 = inner(w.one, apply(shift, w.one, data_qubits()));
        if (std::abs(std::abs(l0) - 1.0) > 1e-10 || std::abs(l0 - l1) > 1e-10) {
            throw std::logic_error("code space is not a single eigenspace of the cyclic shift");
        }
        return l0;
    }();
    return lambda;
}

const OperatorMatrix &code_cyclic_projector() {
    static const OperatorMatrix p = cyclic_projector(RegisterLayout(NUM_QUBITS, 1), cyclic_eigenvalue());
    return p;
}

MeasurementOutcome cyclic_symmetry_test(const StateVector &s, Rng &rng) {
    if (s.num_qubits() != NUM_QUBITS) {
        throw std::invalid_argument("cyclic_symmetry_test needs a 5-qubit state");
    }
    return project_measure(code_cyclic_projector(), s, rng);
}

}  // namespace qsym::code5

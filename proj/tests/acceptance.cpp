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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "qsym/code5.hpp"
#include "qsym/dynamics.hpp"
#include "qsym/experiment.hpp"
#include "qsym/noise.hpp"
#include "qsym/results.hpp"
#include "qsym/symmetry.hpp"

using namespace qsym;

namespace {

/// Collects sub-check outcomes and a one-line detail string.
struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string &what) {
        if (!condition) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

StateVector replicate(const StateVector &q, size_t R) {
    StateVector s;
    for (size_t r = 0; r < R; r++) {
        s = tensor(s, q);
    }
    return s;
}

double max_component_diff(const BellCoefficients &a, const BellCoefficients &b) {
    return std::max(
        {std::abs(a.phi_plus - b.phi_plus),
         std::abs(a.phi_minus - b.phi_minus),
         std::abs(a.psi_plus - b.psi_plus),
         std::abs(a.psi_minus - b.psi_minus)});
}

const StateVector IDEAL = StateVector::qubit(0.6, 0.8);

void exact_one_over_r(Check &c) {
    StateVector bad = orthogonal_complement(IDEAL);
    for (size_t R = 2; R <= 5; R++) {
        RegisterLayout layout(R, 1);
        std::vector<size_t> all(R);
        std::iota(all.begin(), all.end(), 0);
        StateVector s = tensor(replicate(IDEAL, R - 1), bad);
        double p = accept_probability(symmetric_projector(layout), s, all);
        double expect = 1.0 / static_cast<double>(R);
        c.require(std::abs(p - expect) <= 1e-12, "analytic R=" + std::to_string(R));

        ExperimentConfig config = default_config("projection-prob");
        config.R = R;
        config.trials = 10000;
        ExperimentResult r = run_experiment(config);
        double rate = r.summary.values.at("accept_rate");
        double se = std::sqrt(expect * (1 - expect) / static_cast<double>(config.trials));
        c.require(std::abs(rate - expect) <= 3 * se, "sampled R=" + std::to_string(R));
        c.detail << " R=" << R << ": p=" << p << " rate=" << rate << " (" << (rate - expect) / se << " se);";
    }
}

void pairwise_fifty_fifty(Check &c) {
    RegisterLayout layout(2, 1);
    StateVector s = tensor(IDEAL, orthogonal_complement(IDEAL));
    bool found = false;
    for (uint64_t seed = 0; seed < 64 && !found; seed++) {
        Rng rng(seed);
        MeasurementOutcome m = pairwise_symmetrize(s, {0, 1}, layout, PairMode::whole_block, rng);
        c.require(std::abs(m.probability - 0.5) <= 1e-12, "probability 1/2");
        if (!m.accepted) {
            continue;
        }
        found = true;
        DensityMatrix a = partial_trace(m.post_state, {0});
        DensityMatrix b = partial_trace(m.post_state, {1});
        double diff = (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
        c.require(diff <= 1e-12, "reduced states equal");
        c.require(std::abs(fidelity(a, IDEAL) - 0.5) <= 1e-12, "fidelity 1/2");
        c.detail << " p=" << m.probability << " |rho_a - rho_b|=" << diff << " F=" << fidelity(a, IDEAL);
    }
    c.require(found, "accepted branch reached");
}

void factor_r_reduction(Check &c) {
    for (size_t R : {2, 3, 4}) {
        ExperimentConfig config = default_config("reduction-factor");
        config.R = R;
        config.trials = 10000;
        config.noise.drift_sigma = 0.05;
        ExperimentResult r = run_experiment(config);
        double ratio = r.summary.values.at("reduction_ratio");
        double dr = static_cast<double>(R);
        c.require(ratio >= 0.7 * dr && ratio <= 1.3 * dr, "ratio R=" + std::to_string(R));
        c.detail << " R=" << R << ": ratio=" << ratio << ";";
    }
}

void sqrt_r_suppression(Check &c) {
    const double sigma = 0.05;
    const int draws = 10000;
    for (size_t R : {2, 4, 8}) {
        StateVector zero = StateVector::basis(R, 0);
        double sum_sq = 0;
        for (int k = 0; k < draws; k++) {
            Rng rng(trial_seed(4, static_cast<uint64_t>(k)));
            DriftResult d = random_z_drift(zero, sigma, rng);
            double mean = std::accumulate(d.angles.begin(), d.angles.end(), 0.0) / static_cast<double>(R);
            sum_sq += mean * mean;
        }
        double rms = std::sqrt(sum_sq / draws);
        double target = sigma / std::sqrt(static_cast<double>(R));
        c.require(std::abs(rms - target) <= 0.15 * target, "rms R=" + std::to_string(R));
        c.detail << " R=" << R << ": rms/target=" << rms / target << ";";
    }
}

void secular_drift(Check &c) {
    const double omega = 100;
    const double eta = 0.5;  // effective coupling 1 with standard Paulis
    const double coupling = effective_coupling(eta);
    RegisterLayout layout(2, 1);
    OperatorMatrix h = composite_hamiltonian(layout, PenaltyStrength(omega), {eta, -eta});

    for (const auto &[label, start] :
         std::vector<std::pair<std::string, StateVector>>{{"Psi+", StateVector::psi_plus()}, {"product", tensor(IDEAL, IDEAL)}}) {
        BellCoefficients initial = bell_decompose(start);
        c.detail << " " << label << ":";
        for (double t : {0.1, 1.0, 10.0}) {
            BellCoefficients numeric = bell_decompose(evolve(start, h, t));
            BellCoefficients analytic = analytic_pair_evolution(initial, eta, PenaltyStrength(omega), t).coefficients;
            double diff = max_component_diff(numeric, analytic);
            std::ostringstream tag;
            tag << label << " components t=" << t;
            c.require(diff <= 5e-4, tag.str());
            c.detail << " t=" << t << " diff=" << diff;
        }
        double peak = 0;
        for (int k = 0; k <= 20000; k++) {
            double t = 10.0 * k / 20000;
            peak = std::max(peak, std::abs(bell_decompose(evolve(start, h, t)).psi_minus));
        }
        c.require(peak <= 2 * coupling / omega * (1 + 1e-2), label + " Psi- bound");
        c.detail << " max|Psi-|=" << peak << ";";
    }

    double t = 1000 / omega;
    StateVector start = StateVector::psi_plus();
    double phase = std::arg(bell_decompose(evolve(start, h, t)).psi_plus);
    double expected = coupling * coupling * t / omega;
    c.require(std::abs(phase - expected) <= 0.05 * expected, "secular phase");
    c.detail << " phase=" << phase << " vs " << expected;
}

void penalty_spectrum(Check &c) {
    const double omega = 100;
    OperatorMatrix h = pair_penalty_hamiltonian(PenaltyStrength(omega), 0, 1, 2);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
    Eigen::VectorXd expected(4);
    expected << 0, 0, 0, omega;
    double eig_err = (es.eigenvalues() - expected).cwiseAbs().maxCoeff();
    Vector s = StateVector::psi_minus().amplitudes();
    double id_err = (h.matrix() - omega * (s * s.adjoint())).cwiseAbs().maxCoeff();
    double form_err =
        (h.matrix() - singlet_projector_form(PenaltyStrength(omega), 0, 1, 2).matrix()).cwiseAbs().maxCoeff();
    c.require(eig_err <= 1e-10, "eigenvalues");
    c.require(id_err <= 1e-12, "singlet projector identity");
    c.require(form_err <= 1e-12, "(1-SWAP)/2 identity");
    c.detail << " eig_err=" << eig_err << " identity_err=" << id_err << " swap_form_err=" << form_err;
}

void code_correctness(Check &c) {
    std::set<uint8_t> syndromes;
    for (size_t q = 0; q < code5::NUM_QUBITS; q++) {
        for (code5::Pauli p : {code5::Pauli::X, code5::Pauli::Y, code5::Pauli::Z}) {
            syndromes.insert(code5::syndrome_of(code5::PauliString::single(q, p)).bits);
        }
    }
    c.require(syndromes.size() == 15 && !syndromes.contains(0), "syndrome bijection");
    c.require(code5::syndrome_table().size() == 16, "table size");

    std::mt19937_64 gen(7);
    std::normal_distribution<double> normal;
    Rng rng(7);
    double worst_measured = 1;
    double worst_coherent = 1;
    for (int k = 0; k < 10; k++) {
        Complex a(normal(gen), normal(gen));
        Complex b(normal(gen), normal(gen));
        double n = std::sqrt(std::norm(a) + std::norm(b));
        StateVector ideal = code5::encode(a / n, b / n);
        for (size_t q = 0; q < code5::NUM_QUBITS; q++) {
            for (code5::Pauli p : {code5::Pauli::X, code5::Pauli::Y, code5::Pauli::Z}) {
                StateVector hit = apply(code5::PauliString::single(q, p).to_operator(), ideal, {0, 1, 2, 3, 4});
                worst_measured = std::min(worst_measured, std::norm(inner(ideal, code5::measure_and_correct(hit, rng).state)));
                worst_coherent = std::min(worst_coherent, fidelity(code5::coherent_correct(hit), ideal));
            }
        }
    }
    c.require(worst_measured >= 1 - 1e-10, "measured correction");
    c.require(worst_coherent >= 1 - 1e-10, "coherent correction");
    c.detail << " distinct syndromes=" << syndromes.size() << " min F measured=" << worst_measured
             << " min F coherent=" << worst_coherent;
}

void cyclic_invariance(Check &c) {
    OperatorMatrix shift = cyclic_shift(RegisterLayout(5, 1));
    const code5::Codewords &w = code5::logical_codewords();
    Complex lambda = code5::cyclic_eigenvalue();
    double e0 = (shift.matrix() * w.zero.amplitudes() - lambda * w.zero.amplitudes()).cwiseAbs().maxCoeff();
    double e1 = (shift.matrix() * w.one.amplitudes() - lambda * w.one.amplitudes()).cwiseAbs().maxCoeff();
    c.require(e0 <= 1e-10 && e1 <= 1e-10, "eigenstates");
    c.require(std::abs(std::abs(lambda) - 1) <= 1e-10, "unit modulus");
    double p0 = accept_probability(code5::code_cyclic_projector(), w.zero, {0, 1, 2, 3, 4});
    double p1 = accept_probability(code5::code_cyclic_projector(), w.one, {0, 1, 2, 3, 4});
    c.require(std::abs(p0 - 1) <= 1e-10 && std::abs(p1 - 1) <= 1e-10, "accept probability 1");
    c.detail << " lambda=" << lambda.real() << (lambda.imag() < 0 ? "" : "+") << lambda.imag() << "i"
             << " eig_err=" << std::max(e0, e1) << " p=" << std::min(p0, p1);
}

std::string csv_of(const ExperimentResult &r) {
    std::ostringstream out;
    write_csv(out, r.records, r.summary);
    return out.str();
}

void protocol_defect_bound(Check &c) {
    ExperimentConfig config = default_config("pairwise-protocol");
    config.R = 4;
    config.noise.isolated_error_prob = 0.02;
    config.steps = 10;
    config.trials = 10000;
    config.schedule = Schedule::round_robin;
    config.rejected_policy = RejectedPolicy::discard_pair;
    ExperimentResult a = run_experiment(config);
    ExperimentResult b = run_experiment(config);
    double mean = a.summary.values.at("mean_defective_survivors");
    c.require(mean < 1, "mean defective survivors < 1");
    c.require(csv_of(a) == csv_of(b), "seed-reproducible");
    c.detail << " mean defective survivors=" << mean << " +- " << a.summary.values.at("mean_defective_survivors_se")
             << " mean survivors=" << a.summary.values.at("mean_survivors");
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void determinism(Check &c) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qsym_acceptance";
    fs::create_directories(dir);
    for (const ExperimentInfo &info : experiment_catalog()) {
        ExperimentConfig config = info.defaults;
        config.trials = std::min<size_t>(config.trials, 2000);
        for (OutputFormat format : {OutputFormat::csv, OutputFormat::json}) {
            std::string ext = format == OutputFormat::csv ? ".csv" : ".json";
            fs::path first = dir / (info.name + ".1" + ext);
            fs::path second = dir / (info.name + ".2" + ext);
            emit_results(run_experiment(config), format, first);
            emit_results(run_experiment(config), format, second);
            c.require(slurp(first) == slurp(second), info.name + ext);
        }
    }
    fs::remove_all(dir);
    c.detail << " " << experiment_catalog().size() << " experiments x {csv, json} byte-identical";
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char *name;
        double time_limit_s;
        std::function<void(Check &)> run;
    };
    std::vector<Criterion> criteria{
        {1, "exact 1/R acceptance", 10, exact_one_over_r},
        {2, "pairwise 50/50 and error sharing", 1, pairwise_fifty_fifty},
        {3, "factor-R error reduction", 120, factor_r_reduction},
        {4, "sqrt(R) collective suppression", 10, sqrt_r_suppression},
        {5, "secular drift closed form", 10, secular_drift},
        {6, "pair penalty spectrum", 1, penalty_spectrum},
        {7, "five-qubit code correction", 30, code_correctness},
        {8, "cyclic invariance", 5, cyclic_invariance},
        {9, "protocol defect bound", 300, protocol_defect_bound},
        {10, "determinism", 300, determinism},
    };

    int failures = 0;
    for (const Criterion &criterion : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception &e) {
            check.ok = false;
            check.detail << " [exception: " << e.what() << "]";
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.require(elapsed <= criterion.time_limit_s, "runtime limit");
        failures += !check.ok;
        std::printf(
            "%s criterion %d (%s) %.2fs:%s\n", check.ok ? "PASS" : "FAIL", criterion.number, criterion.name, elapsed,
            check.detail.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

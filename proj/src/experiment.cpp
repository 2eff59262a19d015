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

#include "qsym/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qsym/code5.hpp"
#include "qsym/errors.hpp"

namespace qsym {

namespace {

// ---------------------------------------------------------------------------
// Shared helpers.

struct Stat {
    double mean = 0;
    double se = 0;
    size_t n = 0;
};

Stat stat_of(const std::vector<double> &xs) {
    Stat s;
    s.n = xs.size();
    if (xs.empty()) {
        return s;
    }
    s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) {
            ss += (x - s.mean) * (x - s.mean);
        }
        s.se = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
    }
    return s;
}

void put(Summary &summary, const std::string &key, const Stat &s) {
    summary.values[key] = s.mean;
    summary.values[key + "_se"] = s.se;
}

StateVector ideal_qubit(const ExperimentConfig &config) {
    return StateVector::qubit(config.ideal_alpha, config.ideal_beta);
}

StateVector replica_ideal(const ExperimentConfig &config) {
    StateVector q = ideal_qubit(config);
    StateVector out;
    for (size_t b = 0; b < config.L; b++) {
        out = tensor(out, q);
    }
    return out;
}

StateVector product_of(const StateVector &replica, size_t count) {
    StateVector out;
    for (size_t r = 0; r < count; r++) {
        out = tensor(out, replica);
    }
    return out;
}

double replica_fidelity(const StateVector &s, const RegisterLayout &layout, size_t r, const StateVector &ideal) {
    return fidelity(partial_trace(s, layout.replica_qubits(r)), ideal);
}

double pure_fidelity(const StateVector &s, const StateVector &ideal) {
    return std::clamp(std::norm(inner(ideal, s)), 0.0, 1.0);
}

/// Random normalized logical amplitudes.
std::pair<Complex, Complex> random_logical(Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Complex a{normal(rng), normal(rng)};
    Complex b{normal(rng), normal(rng)};
    double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    // Exact renormalization so encode()'s 1e-12 check never trips on rounding.
    double m = std::sqrt(std::norm(a) + std::norm(b));
    return {a / m, b / m};
}

// ---------------------------------------------------------------------------
// Experiments. Each fills the rows of one trial.

TrialRecord projection_prob_trial(const ExperimentConfig &config, uint64_t trial, Rng &rng) {
    RegisterLayout layout(config.R, config.L);
    StateVector ideal = replica_ideal(config);
    StateVector state = product_of(ideal, config.R);
    size_t bad = config.R - 1;
    state = orthogonal_flip(state, bad, layout, ideal);

    TrialRecord rec;
    rec.trial = trial;
    rec.log.push_back(StepLog{0, {bad}, {}, {}});
    for (size_t r = 0; r < config.R; r++) {
        Row row{0, r, r == bad ? "flip" : "ok", -1, replica_fidelity(state, layout, r, ideal), config.R, 0};
        rec.rows.push_back(row);
    }
    size_t defective0 = 0;
    for (const Row &row : rec.rows) {
        defective0 += row.fidelity < config.defect_threshold;
    }
    for (Row &row : rec.rows) {
        row.defective_survivors = defective0;
    }

    OperatorMatrix p = symmetric_projector(layout);
    MeasurementOutcome m = project_measure(p, state, rng);
    rec.metrics["accept_probability"] = m.probability;
    rec.log.push_back(StepLog{1, {}, {}, {TestLog{0, config.R - 1, m.probability, m.accepted}}});
    std::vector<double> fids(config.R);
    size_t defective = 0;
    for (size_t r = 0; r < config.R; r++) {
        fids[r] = replica_fidelity(m.post_state, layout, r, ideal);
        defective += fids[r] < config.defect_threshold;
    }
    rec.survivors = m.accepted ? config.R : 0;
    rec.defective_survivors = m.accepted ? defective : 0;
    for (size_t r = 0; r < config.R; r++) {
        rec.rows.push_back(Row{
            1,
            r,
            m.accepted ? "accept" : "reject",
            m.accepted ? 1 : 0,
            fids[r],
            rec.survivors,
            rec.defective_survivors});
    }
    if (m.accepted) {
        rec.final_fidelities = fids;
    }
    return rec;
}

TrialRecord reduction_factor_trial(const ExperimentConfig &config, uint64_t trial, Rng &rng) {
    RegisterLayout layout(config.R, config.L);
    StateVector ideal = replica_ideal(config);
    StateVector state = product_of(ideal, config.R);
    std::vector<size_t> all(layout.num_qubits());
    std::iota(all.begin(), all.end(), 0);
    DriftResult drift = config.noise.drift_axis == DriftAxis::z
                            ? random_z_drift(state, config.noise.drift_sigma, rng, all)
                            : random_axis_drift(state, config.noise.drift_sigma, rng, all);

    TrialRecord rec;
    rec.trial = trial;
    rec.log.push_back(StepLog{0, {}, drift.angles, {}});
    std::vector<double> before(config.R);
    size_t defective0 = 0;
    for (size_t r = 0; r < config.R; r++) {
        before[r] = replica_fidelity(drift.state, layout, r, ideal);
        defective0 += before[r] < config.defect_threshold;
    }
    for (size_t r = 0; r < config.R; r++) {
        rec.rows.push_back(Row{0, r, "drift", -1, before[r], config.R, defective0});
    }

    MeasurementOutcome m = project_measure(symmetric_projector(layout), drift.state, rng);
    rec.metrics["accept_probability"] = m.probability;
    rec.log.push_back(StepLog{1, {}, {}, {TestLog{0, config.R - 1, m.probability, m.accepted}}});
    std::vector<double> after(config.R);
    size_t defective = 0;
    for (size_t r = 0; r < config.R; r++) {
        after[r] = replica_fidelity(m.post_state, layout, r, ideal);
        defective += after[r] < config.defect_threshold;
    }
    rec.survivors = m.accepted ? config.R : 0;
    rec.defective_survivors = m.accepted ? defective : 0;
    for (size_t r = 0; r < config.R; r++) {
        rec.rows.push_back(Row{
            1,
            r,
            m.accepted ? "accept" : "reject",
            m.accepted ? 1 : 0,
            after[r],
            rec.survivors,
            rec.defective_survivors});
    }
    if (m.accepted) {
        rec.final_fidelities = after;
    }
    return rec;
}

TrialRecord pairwise_protocol_trial(const ExperimentConfig &config, uint64_t trial, Rng &rng) {
    const size_t n = config.R;
    RegisterLayout layout(n, config.L);
    StateVector ideal = replica_ideal(config);
    std::vector<StateVector> ideals(n, ideal);
    StateVector state = product_of(ideal, n);
    std::vector<bool> alive(n, true);
    PairingSchedule schedule = pairing_schedule(n, config.steps);
    size_t discarded_pairs = 0;
    bool aborted = false;
    size_t rejections = 0;

    TrialRecord rec;
    rec.trial = trial;
    std::vector<double> fids(n, std::numeric_limits<double>::quiet_NaN());

    for (size_t step = 0; step < config.steps; step++) {
        std::vector<std::string> events(n);
        std::vector<int> accept(n, -1);
        std::vector<bool> alive_before = alive;
        StepLog log{step, {}, {}, {}};

        if (!aborted) {
            ChannelResult ch = step_channel(state, config.noise, rng, layout, ideals, alive);
            state = std::move(ch.state);
            log.flipped = ch.events.flipped;
            log.angles = ch.events.angles;
            for (size_t r : log.flipped) {
                events[r] = "flip";
            }

            auto reject = [&](const std::vector<size_t> &group) {
                rejections++;
                if (config.rejected_policy == RejectedPolicy::spread_report) {
                    return;
                }
                if (config.rejected_policy == RejectedPolicy::abort) {
                    aborted = true;
                    std::fill(alive.begin(), alive.end(), false);
                    return;
                }
                for (size_t r : group) {
                    alive[r] = false;
                }
                discarded_pairs += group.size() / 2;
            };

            if (config.schedule == Schedule::round_robin) {
                for (auto pair : schedule.rounds[step]) {
                    if (aborted || !alive[pair.first] || !alive[pair.second]) {
                        continue;
                    }
                    MeasurementOutcome m = pairwise_symmetrize(state, pair, layout, config.mode, rng);
                    state = m.post_state;
                    log.tests.push_back(TestLog{pair.first, pair.second, m.probability, m.accepted});
                    accept[pair.first] = accept[pair.second] = m.accepted ? 1 : 0;
                    if (!m.accepted) {
                        reject({pair.first, pair.second});
                    }
                }
            } else {
                std::vector<size_t> members;
                for (size_t r = 0; r < n; r++) {
                    if (alive[r]) {
                        members.push_back(r);
                    }
                }
                if (members.size() >= 2) {
                    std::vector<size_t> targets;
                    for (size_t r : members) {
                        for (size_t q : layout.replica_qubits(r)) {
                            targets.push_back(q);
                        }
                    }
                    OperatorMatrix p = symmetric_projector(RegisterLayout(members.size(), config.L));
                    MeasurementOutcome m = project_measure(p, state, targets, rng);
                    state = m.post_state;
                    log.tests.push_back(TestLog{members.front(), members.back(), m.probability, m.accepted});
                    for (size_t r : members) {
                        accept[r] = m.accepted ? 1 : 0;
                    }
                    if (!m.accepted) {
                        // Losing the global test loses the whole group.
                        if (config.rejected_policy == RejectedPolicy::discard_pair) {
                            rejections++;
                            aborted = true;
                            std::fill(alive.begin(), alive.end(), false);
                        } else {
                            reject(members);
                        }
                    }
                }
            }
        }

        size_t survivors = 0;
        size_t defective = 0;
        for (size_t r = 0; r < n; r++) {
            if (alive[r]) {
                fids[r] = replica_fidelity(state, layout, r, ideal);
                survivors++;
                defective += fids[r] < config.defect_threshold;
            } else {
                fids[r] = std::numeric_limits<double>::quiet_NaN();
            }
        }
        for (size_t r = 0; r < n; r++) {
            std::string ev = events[r];
            auto add = [&ev](const std::string &part) { ev = ev.empty() ? part : ev + "+" + part; };
            if (!alive_before[r]) {
                ev = "dead";
            } else {
                if (accept[r] == 1) {
                    add("accept");
                } else if (accept[r] == 0) {
                    add("reject");
                }
                if (!alive[r]) {
                    add("discard");
                }
                if (ev.empty()) {
                    ev = "ok";
                }
            }
            rec.rows.push_back(Row{step, r, ev, accept[r], fids[r], survivors, defective});
        }
        rec.log.push_back(std::move(log));
        rec.survivors = survivors;
        rec.defective_survivors = defective;
    }
    for (size_t r = 0; r < n; r++) {
        if (alive[r]) {
            rec.final_fidelities.push_back(fids[r]);
        }
    }
    rec.metrics["discarded_pairs"] = static_cast<double>(discarded_pairs);
    rec.metrics["aborted"] = aborted ? 1.0 : 0.0;
    rec.metrics["rejections"] = static_cast<double>(rejections);
    return rec;
}

double max_abs_component_diff(const BellCoefficients &a, const BellCoefficients &b) {
    return std::max(
        {std::abs(a.phi_plus - b.phi_plus),
         std::abs(a.phi_minus - b.phi_minus),
         std::abs(a.psi_plus - b.psi_plus),
         std::abs(a.psi_minus - b.psi_minus)});
}

TrialRecord zeno_drift_trial(const ExperimentConfig &config, uint64_t trial) {
    constexpr size_t dense_samples = 4000;
    RegisterLayout layout(2, 1);
    PenaltyStrength omega(config.omega);
    StateVector ideal = ideal_qubit(config);
    StateVector initial = tensor(ideal, ideal);
    BellCoefficients initial_bell = bell_decompose(initial);
    std::vector<double> drifts{config.epsilon + config.eta, config.epsilon - config.eta};
    OperatorMatrix h = composite_hamiltonian(layout, omega, drifts);
    OperatorMatrix p_sym = symmetric_projector(layout);
    double c = effective_coupling(config.eta, config.convention);
    if (config.convention == PauliConvention::literal) {
        // The numeric model must share the coupling the oracle assumes.
        drifts = {config.epsilon + c / 2.0, config.epsilon - c / 2.0};
        h = composite_hamiltonian(layout, omega, drifts);
    }

    TrialRecord rec;
    rec.trial = trial;
    auto numeric_at = [&](double t) { return evolve(initial, h, t); };

    double max_diff_samples = 0;
    for (size_t k = 0; k < config.steps; k++) {
        double t = config.time * static_cast<double>(k + 1) / static_cast<double>(config.steps);
        StateVector s = numeric_at(t);
        BellCoefficients numeric = bell_decompose(s);
        BellCoefficients analytic = analytic_pair_evolution(initial_bell, config.eta, omega, t, config.convention).coefficients;
        max_diff_samples = std::max(max_diff_samples, max_abs_component_diff(numeric, analytic));
        std::vector<double> f{replica_fidelity(s, layout, 0, ideal), replica_fidelity(s, layout, 1, ideal)};
        size_t defective = (f[0] < config.defect_threshold) + (f[1] < config.defect_threshold);
        for (size_t r = 0; r < 2; r++) {
            rec.rows.push_back(Row{k, r, "evolve", -1, f[r], 2, defective});
        }
        if (k + 1 == config.steps) {
            rec.final_fidelities = f;
            rec.survivors = 2;
            rec.defective_survivors = defective;
            rec.metrics["final_component_diff"] = max_abs_component_diff(numeric, analytic);
            double phase = std::arg(numeric.psi_plus / initial_bell.psi_plus);
            rec.metrics["psi_plus_phase"] = phase;
        }
    }
    rec.metrics["max_component_diff"] = max_diff_samples;
    rec.metrics["expected_phase"] = c * c * config.time / config.omega;

    double psi_minus_max = 0;
    double leak_max = 0;
    for (size_t k = 0; k <= dense_samples; k++) {
        double t = config.time * static_cast<double>(k) / static_cast<double>(dense_samples);
        StateVector s = numeric_at(t);
        double psi_minus = std::abs(bell_decompose(s).psi_minus);
        double inside = accept_probability(p_sym, s, {0, 1});
        psi_minus_max = std::max(psi_minus_max, psi_minus);
        leak_max = std::max(leak_max, 1.0 - inside);
    }
    rec.metrics["psi_minus_max"] = psi_minus_max;
    rec.metrics["psi_minus_bound"] = 2.0 * std::abs(c) / config.omega * std::abs(initial_bell.psi_plus);
    rec.metrics["leak_max"] = leak_max;
    rec.metrics["out_of_regime"] = std::abs(c) / config.omega > 0.1 ? 1.0 : 0.0;
    return rec;
}

TrialRecord code5_correction_trial(const ExperimentConfig &config, uint64_t trial, Rng &rng) {
    (void)config;
    auto [alpha, beta] = random_logical(rng);
    StateVector ideal = code5::encode(alpha, beta);
    std::uniform_int_distribution<int> pick(0, 14);
    int e = pick(rng);
    code5::PauliString error =
        code5::PauliString::single(static_cast<size_t>(e / 3), static_cast<code5::Pauli>(1 + e % 3));
    std::vector<size_t> data{0, 1, 2, 3, 4};
    StateVector corrupted = apply(error.to_operator(), ideal, data);

    code5::CorrectionResult measured = code5::measure_and_correct(corrupted, rng);
    DensityMatrix coherent = code5::coherent_correct(corrupted);

    double f0 = pure_fidelity(corrupted, ideal);
    double f1 = pure_fidelity(measured.state, ideal);
    double f2 = fidelity(coherent, ideal);
    auto defective = [&](double f) { return static_cast<size_t>(f < config.defect_threshold); };

    TrialRecord rec;
    rec.trial = trial;
    std::string letters = error.str().substr(1);
    rec.rows.push_back(Row{0, 0, "error:" + letters, -1, f0, 1, defective(f0)});
    rec.rows.push_back(Row{1, 0, "measured:" + measured.syndrome.str(), -1, f1, 1, defective(f1)});
    rec.rows.push_back(Row{2, 0, "coherent", -1, f2, 1, defective(f2)});
    rec.final_fidelities = {f2};
    rec.survivors = 1;
    rec.defective_survivors = defective(f2);
    rec.metrics["syndrome_matches"] = measured.syndrome == code5::syndrome_of(error) ? 1.0 : 0.0;
    return rec;
}

TrialRecord cyclic_test_trial(const ExperimentConfig &config, uint64_t trial, Rng &rng) {
    auto [alpha, beta] = random_logical(rng);
    StateVector ideal = code5::encode(alpha, beta);
    std::vector<size_t> data{0, 1, 2, 3, 4};
    DriftResult drift = config.noise.drift_axis == DriftAxis::z
                            ? random_z_drift(ideal, config.noise.drift_sigma, rng, data)
                            : random_axis_drift(ideal, config.noise.drift_sigma, rng, data);
    MeasurementOutcome m = code5::cyclic_symmetry_test(drift.state, rng);
    double before = pure_fidelity(drift.state, ideal);
    double after = pure_fidelity(m.post_state, ideal);

    TrialRecord rec;
    rec.trial = trial;
    rec.log.push_back(StepLog{0, {}, drift.angles, {}});
    rec.log.push_back(StepLog{1, {}, {}, {TestLog{0, 0, m.probability, m.accepted}}});
    size_t d0 = before < config.defect_threshold;
    rec.rows.push_back(Row{0, 0, "drift", -1, before, 1, d0});
    rec.survivors = m.accepted ? 1 : 0;
    rec.defective_survivors = m.accepted && after < config.defect_threshold ? 1 : 0;
    rec.rows.push_back(Row{
        1, 0, m.accepted ? "accept" : "reject+discard", m.accepted ? 1 : 0, after, rec.survivors,
        rec.defective_survivors});
    if (m.accepted) {
        rec.final_fidelities = {after};
    }
    rec.metrics["accept_probability"] = m.probability;
    return rec;
}

// ---------------------------------------------------------------------------
// Summaries, computed from records only.

std::vector<const Row *> rows_at(const std::vector<TrialRecord> &records, size_t step) {
    std::vector<const Row *> out;
    for (const TrialRecord &rec : records) {
        for (const Row &row : rec.rows) {
            if (row.step == step) {
                out.push_back(&row);
            }
        }
    }
    return out;
}

std::vector<double> metric_values(const std::vector<TrialRecord> &records, const std::string &key) {
    std::vector<double> out;
    for (const TrialRecord &rec : records) {
        auto it = rec.metrics.find(key);
        if (it != rec.metrics.end()) {
            out.push_back(it->second);
        }
    }
    return out;
}

/// Fraction of trials whose replica-0 row at `step` was accepted.
Stat accept_rate(const std::vector<TrialRecord> &records, size_t step) {
    std::vector<double> xs;
    for (const Row *row : rows_at(records, step)) {
        if (row->replica == 0 && row->accept >= 0) {
            xs.push_back(row->accept == 1 ? 1.0 : 0.0);
        }
    }
    Stat s = stat_of(xs);
    // Binomial standard error.
    if (s.n > 0) {
        s.se = std::sqrt(s.mean * (1 - s.mean) / static_cast<double>(s.n));
    }
    return s;
}

double safe_ratio(double a, double b) {
    return b > 0 ? a / b : 0.0;
}

Summary summarize_projection(const ExperimentConfig &config, const std::vector<TrialRecord> &records) {
    Summary s;
    s.claim = "one replica orthogonal to the rest passes the full symmetry test with probability 1/R";
    Stat rate = accept_rate(records, 1);
    double claim = 1.0 / static_cast<double>(config.R);
    put(s, "accept_rate", rate);
    s.values["analytic_probability"] = stat_of(metric_values(records, "accept_probability")).mean;
    s.values["claim_value"] = claim;
    double sd = std::sqrt(claim * (1 - claim) / static_cast<double>(std::max<size_t>(rate.n, 1)));
    s.values["z_score"] = (rate.mean - claim) / sd;
    std::vector<double> accepted_fids;
    for (const Row *row : rows_at(records, 1)) {
        if (row->accept == 1) {
            accepted_fids.push_back(row->fidelity);
        }
    }
    put(s, "accepted_replica_fidelity", stat_of(accepted_fids));
    s.values["trials"] = static_cast<double>(records.size());
    return s;
}

Summary summarize_reduction(const ExperimentConfig &config, const std::vector<TrialRecord> &records) {
    Summary s;
    s.claim = "symmetrizing R replicas divides the mean per-replica drift error by about R";
    std::vector<double> before;
    for (const Row *row : rows_at(records, 0)) {
        before.push_back(1.0 - row->fidelity);
    }
    std::vector<double> after;
    for (const Row *row : rows_at(records, 1)) {
        if (row->accept == 1) {
            after.push_back(1.0 - row->fidelity);
        }
    }
    Stat b = stat_of(before);
    Stat a = stat_of(after);
    put(s, "mean_unprotected_infidelity", b);
    put(s, "mean_post_infidelity", a);
    s.values["reduction_ratio"] = safe_ratio(b.mean, a.mean);
    s.values["claim_value"] = static_cast<double>(config.R);
    put(s, "accept_rate", accept_rate(records, 1));
    s.values["trials"] = static_cast<double>(records.size());
    return s;
}

Summary summarize_protocol(const ExperimentConfig &config, const std::vector<TrialRecord> &records) {
    Summary s;
    s.claim = "with repeated pairwise symmetrization the survivors hold less than one defective result on average";
    std::vector<double> survivors;
    std::vector<double> defective;
    std::vector<double> flips;
    size_t conservation_violations = 0;
    for (const TrialRecord &rec : records) {
        survivors.push_back(static_cast<double>(rec.survivors));
        defective.push_back(static_cast<double>(rec.defective_survivors));
        double f = 0;
        for (const StepLog &log : rec.log) {
            f += static_cast<double>(log.flipped.size());
        }
        flips.push_back(f);
        if (config.rejected_policy == RejectedPolicy::discard_pair && config.schedule == Schedule::round_robin) {
            // survivors + 2 * discarded pairs == R after every step.
            size_t discarded = 0;
            for (const StepLog &log : rec.log) {
                for (const TestLog &t : log.tests) {
                    discarded += !t.accepted;
                }
                size_t alive = 0;
                for (const Row &row : rec.rows) {
                    if (row.step == log.step && row.replica == 0) {
                        alive = row.survivors;
                    }
                }
                conservation_violations += alive + 2 * discarded != config.R;
            }
        }
    }
    put(s, "mean_survivors", stat_of(survivors));
    put(s, "mean_defective_survivors", stat_of(defective));
    put(s, "mean_flips", stat_of(flips));
    put(s, "abort_rate", stat_of(metric_values(records, "aborted")));
    put(s, "mean_discarded_pairs", stat_of(metric_values(records, "discarded_pairs")));
    s.values["expected_failure_prob"] =
        1.0 - std::pow(1.0 - config.noise.isolated_error_prob, static_cast<double>(config.steps));
    s.values["claim_value"] = 1.0;
    s.values["conservation_violations"] = static_cast<double>(conservation_violations);
    s.values["trials"] = static_cast<double>(records.size());
    return s;
}

Summary summarize_zeno(const ExperimentConfig &config, const std::vector<TrialRecord> &records) {
    Summary s;
    s.claim = "a strong singlet penalty keeps the Psi- admixture small while Psi+ drifts by the secular phase c^2 t / Omega";
    for (const char *key :
         {"final_component_diff", "max_component_diff", "psi_plus_phase", "expected_phase", "psi_minus_max",
          "psi_minus_bound", "leak_max", "out_of_regime"}) {
        std::vector<double> v = metric_values(records, key);
        s.values[key] = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
    }
    double expected = s.values["expected_phase"];
    s.values["phase_relative_error"] =
        expected != 0 ? std::abs(s.values["psi_plus_phase"] - expected) / std::abs(expected) : 0.0;
    double c = effective_coupling(config.eta, config.convention);
    s.values["coupling"] = c;
    s.values["claim_value"] = 2.0 * std::abs(c) / config.omega;
    s.values["trials"] = static_cast<double>(records.size());
    return s;
}

Summary summarize_code5(const ExperimentConfig &, const std::vector<TrialRecord> &records) {
    Summary s;
    s.claim = "every single-qubit Pauli error on a five-qubit codeword is undone, measured or measurement-free";
    for (size_t step = 0; step < 3; step++) {
        std::vector<double> f;
        for (const Row *row : rows_at(records, step)) {
            f.push_back(row->fidelity);
        }
        static constexpr std::array<const char *, 3> names{"corrupted", "measured", "coherent"};
        std::string key = std::string(names[step]) + "_fidelity";
        put(s, "mean_" + key, stat_of(f));
        s.values["min_" + key] = f.empty() ? 0.0 : *std::min_element(f.begin(), f.end());
    }
    s.values["syndrome_match_rate"] = stat_of(metric_values(records, "syndrome_matches")).mean;
    s.values["claim_value"] = 1.0;
    s.values["trials"] = static_cast<double>(records.size());
    return s;
}

Summary summarize_cyclic(const ExperimentConfig &, const std::vector<TrialRecord> &records) {
    Summary s;
    s.claim = "passing the cyclic-symmetry test shrinks small drift errors; failing it discards the codeword";
    put(s, "accept_rate", accept_rate(records, 1));
    std::vector<double> before_all;
    std::vector<double> before_acc;
    std::vector<double> after_acc;
    for (const TrialRecord &rec : records) {
        const Row &b = rec.rows.at(0);
        const Row &a = rec.rows.at(1);
        before_all.push_back(1 - b.fidelity);
        if (a.accept == 1) {
            before_acc.push_back(1 - b.fidelity);
            after_acc.push_back(1 - a.fidelity);
        }
    }
    put(s, "mean_infidelity_before", stat_of(before_all));
    put(s, "mean_infidelity_before_accepted", stat_of(before_acc));
    put(s, "mean_infidelity_after_accepted", stat_of(after_acc));
    s.values["improvement_ratio"] = safe_ratio(stat_of(before_acc).mean, stat_of(after_acc).mean);
    std::vector<double> p = metric_values(records, "accept_probability");
    s.values["min_accept_probability"] = p.empty() ? 0.0 : *std::min_element(p.begin(), p.end());
    s.values["trials"] = static_cast<double>(records.size());
    return s;
}

// ---------------------------------------------------------------------------
// Catalog.

ExperimentConfig make_defaults(const std::string &name) {
    ExperimentConfig c;
    c.experiment_name = name;
    if (name == "projection-prob") {
        c.R = 3;
        c.steps = 2;
        c.rejected_policy = RejectedPolicy::abort;
    } else if (name == "reduction-factor") {
        c.R = 3;
        c.steps = 2;
        c.noise.drift_sigma = 0.05;
        c.rejected_policy = RejectedPolicy::abort;
    } else if (name == "pairwise-protocol") {
        c.R = 4;
        c.steps = 10;
        c.noise.isolated_error_prob = 0.02;
    } else if (name == "zeno-drift") {
        c.R = 2;
        c.steps = 10;
        c.trials = 1;
    } else if (name == "code5-correction") {
        c.R = 1;
        c.L = 5;
        c.steps = 3;
        c.trials = 1000;
    } else if (name == "cyclic-test") {
        c.R = 1;
        c.L = 5;
        c.steps = 2;
        c.trials = 1000;
        c.noise.drift_sigma = 0.05;
    }
    return c;
}

}  // namespace

const std::vector<ExperimentInfo> &experiment_catalog() {
    static const std::vector<ExperimentInfo> catalog{
        {"projection-prob",
         "One replica orthogonal to the others passes the full symmetric-subspace test with probability exactly 1/R; "
         "when it passes, the error is spread evenly over all replicas.",
         "R replicas of L=1 qubit in ideal state (ideal_alpha, ideal_beta); the last replica is flipped to the "
         "orthogonal state; steps fixed at 2 (0: after flip, 1: after the test).",
         make_defaults("projection-prob")},
        {"reduction-factor",
         "Projecting R independently drifted replicas onto the symmetric subspace reduces the mean per-replica "
         "infidelity by a factor of about R.",
         "R replicas of L qubits; every qubit drifts by exp(-i theta sigma_z / 2), theta ~ Normal(0, drift_sigma^2); "
         "steps fixed at 2 (0: unprotected, 1: after the accepted test).",
         make_defaults("reduction-factor")},
        {"pairwise-protocol",
         "Symmetrizing disjoint pairs between logical steps, with round-robin partners, leaves less than one defective "
         "computer among the survivors on average.",
         "R single-qubit computers; each step applies orthogonal flips with isolated_error_prob and optional drift, "
         "then symmetrizes the round's pairs (mode, rejected_policy, schedule); a survivor is defective when its "
         "fidelity is below defect_threshold.",
         make_defaults("pairwise-protocol")},
        {"zeno-drift",
         "Under a large singlet penalty Omega the Psi- admixture stays below 2c/Omega while the Psi+ amplitude "
         "accumulates the slow phase c^2 t / Omega (c the effective Psi+/Psi- coupling).",
         "Two qubits in (ideal_alpha, ideal_beta) x (ideal_alpha, ideal_beta), drift a = epsilon + eta, "
         "b = epsilon - eta, penalty omega, evolved to `time`; `steps` sample times; convention picks c = 2 eta "
         "(standard) or c = eta (literal).",
         make_defaults("zeno-drift")},
        {"code5-correction",
         "Any single-qubit Pauli error on the cyclic five-qubit code is corrected, by syndrome measurement or by a "
         "measurement-free unitary whose ancillas are then discarded.",
         "Random logical state, uniformly random single-qubit Pauli error; steps fixed at 3 (0: corrupted, "
         "1: measured correction, 2: coherent correction).",
         make_defaults("code5-correction")},
        {"cyclic-test",
         "Testing the cyclic symmetry of a drifted codeword reduces small errors when the test passes and forces the "
         "codeword to be discarded when it fails.",
         "Random logical state; every physical qubit drifts with drift_sigma; steps fixed at 2 (0: drifted, "
         "1: after the test).",
         make_defaults("cyclic-test")},
    };
    return catalog;
}

std::string describe_experiments() {
    std::ostringstream out;
    for (const ExperimentInfo &info : experiment_catalog()) {
        const ExperimentConfig &d = info.defaults;
        out << info.name << "\n";
        out << "  claim: " << info.claim << "\n";
        out << "  parameters: " << info.parameters << "\n";
        out << "  defaults: R=" << d.R << " L=" << d.L << " steps=" << d.steps << " trials=" << d.trials
            << " seed=" << d.seed << " isolated_error_prob=" << d.noise.isolated_error_prob
            << " drift_sigma=" << d.noise.drift_sigma << " drift_axis=" << to_string(d.noise.drift_axis)
            << " omega=" << d.omega << " eta=" << d.eta << " epsilon=" << d.epsilon
            << " convention=" << to_string(d.convention) << " time=" << d.time << " mode=" << to_string(d.mode)
            << " rejected_policy=" << to_string(d.rejected_policy) << " schedule=" << to_string(d.schedule)
            << " defect_threshold=" << d.defect_threshold << " ideal_alpha=" << d.ideal_alpha
            << " ideal_beta=" << d.ideal_beta << "\n";
    }
    return out.str();
}

ExperimentConfig default_config(const std::string &experiment_name) {
    for (const ExperimentInfo &info : experiment_catalog()) {
        if (info.name == experiment_name) {
            return info.defaults;
        }
    }
    throw ConfigError("unknown experiment '" + experiment_name + "'");
}

void validate(const ExperimentConfig &c) {
    default_config(c.experiment_name);
    auto require = [](bool ok, const std::string &message) {
        if (!ok) {
            throw ConfigError(message);
        }
    };
    require(c.trials >= 1, "trials must be at least 1");
    require(c.R >= 1 && c.L >= 1, "R and L must be positive");
    require(c.steps >= 1, "steps must be at least 1");
    try {
        c.noise.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    require(std::abs(c.ideal_alpha * c.ideal_alpha + c.ideal_beta * c.ideal_beta - 1.0) <= 1e-12,
        "ideal_alpha^2 + ideal_beta^2 must equal 1");
    require(c.defect_threshold >= 0.0 && c.defect_threshold <= 1.0, "defect_threshold must lie in [0, 1]");
    require(std::isfinite(c.omega) && c.omega > 0.0, "omega must be positive");
    require(std::isfinite(c.eta) && std::isfinite(c.epsilon), "eta and epsilon must be finite");
    require(std::isfinite(c.time) && c.time >= 0.0, "time must be non-negative");

    auto ceiling = [](size_t qubits, size_t limit, const std::string &what) {
        if (qubits > limit) {
            throw SizeLimitError(
                what + " needs " + std::to_string(qubits) + " qubits; the ceiling is " + std::to_string(limit));
        }
    };
    const std::string &name = c.experiment_name;
    if (name == "projection-prob") {
        require(c.R >= 2 && c.L == 1, "projection-prob needs R >= 2 and L = 1");
        require(c.steps == 2, "projection-prob has exactly 2 steps");
        ceiling(c.R * c.L, MAX_OPERATOR_QUBITS, "projection-prob");
    } else if (name == "reduction-factor") {
        require(c.R >= 2, "reduction-factor needs R >= 2");
        require(c.steps == 2, "reduction-factor has exactly 2 steps");
        ceiling(c.R * c.L, MAX_OPERATOR_QUBITS, "reduction-factor");
    } else if (name == "pairwise-protocol") {
        require(c.R >= 2, "pairwise-protocol needs R >= 2");
        require(c.L == 1 || c.noise.isolated_error_prob == 0.0,
            "orthogonal flips need L = 1; multi-qubit protocol runs use drift only");
        ceiling(2 * c.L, MAX_OPERATOR_QUBITS, "pairwise-protocol pair test");
        ceiling(c.R * c.L, c.schedule == Schedule::global ? MAX_OPERATOR_QUBITS : MAX_STATE_QUBITS,
            "pairwise-protocol");
    } else if (name == "zeno-drift") {
        require(c.R == 2 && c.L == 1, "zeno-drift needs R = 2 and L = 1");
    } else if (name == "code5-correction") {
        require(c.R == 1 && c.L == 5, "code5-correction needs R = 1 and L = 5");
        require(c.steps == 3, "code5-correction has exactly 3 steps");
    } else if (name == "cyclic-test") {
        require(c.R == 1 && c.L == 5, "cyclic-test needs R = 1 and L = 5");
        require(c.steps == 2, "cyclic-test has exactly 2 steps");
    }
}

TrialRecord run_trial(const ExperimentConfig &config, uint64_t trial) {
    Rng rng(trial_seed(config.seed, trial));
    const std::string &name = config.experiment_name;
    if (name == "projection-prob") {
        return projection_prob_trial(config, trial, rng);
    }
    if (name == "reduction-factor") {
        return reduction_factor_trial(config, trial, rng);
    }
    if (name == "pairwise-protocol") {
        return pairwise_protocol_trial(config, trial, rng);
    }
    if (name == "zeno-drift") {
        return zeno_drift_trial(config, trial);
    }
    if (name == "code5-correction") {
        return code5_correction_trial(config, trial, rng);
    }
    if (name == "cyclic-test") {
        return cyclic_test_trial(config, trial, rng);
    }
    throw ConfigError("unknown experiment '" + name + "'");
}

Summary summarize(const ExperimentConfig &config, const std::vector<TrialRecord> &records) {
    std::vector<TrialRecord> sorted = records;
    std::sort(sorted.begin(), sorted.end(), [](const TrialRecord &a, const TrialRecord &b) { return a.trial < b.trial; });
    const std::string &name = config.experiment_name;
    if (name == "projection-prob") {
        return summarize_projection(config, sorted);
    }
    if (name == "reduction-factor") {
        return summarize_reduction(config, sorted);
    }
    if (name == "pairwise-protocol") {
        return summarize_protocol(config, sorted);
    }
    if (name == "zeno-drift") {
        return summarize_zeno(config, sorted);
    }
    if (name == "code5-correction") {
        return summarize_code5(config, sorted);
    }
    if (name == "cyclic-test") {
        return summarize_cyclic(config, sorted);
    }
    throw ConfigError("unknown experiment '" + name + "'");
}

ExperimentResult run_experiment(const ExperimentConfig &config) {
    validate(config);
    ExperimentResult result{config, {}, {}};
    result.records.reserve(config.trials);
    for (uint64_t k = 0; k < config.trials; k++) {
        result.records.push_back(run_trial(config, k));
    }
    result.summary = summarize(config, result.records);
    return result;
}

std::string to_string(PairMode mode) {
    switch (mode) {
        case PairMode::whole_block:
            return "whole-block";
        case PairMode::bitwise:
            return "bitwise";
        case PairMode::bitwise_sequential:
            return "bitwise-sequential";
    }
    return "?";
}

std::string to_string(RejectedPolicy policy) {
    switch (policy) {
        case RejectedPolicy::abort:
            return "abort";
        case RejectedPolicy::discard_pair:
            return "discard-pair";
        case RejectedPolicy::spread_report:
            return "spread-report";
    }
    return "?";
}

std::string to_string(Schedule schedule) {
    return schedule == Schedule::round_robin ? "round-robin" : "global";
}

std::string to_string(PauliConvention convention) {
    return convention == PauliConvention::standard ? "standard" : "literal";
}

std::string to_string(DriftAxis axis) {
    return axis == DriftAxis::z ? "z" : "random";
}

PairMode parse_pair_mode(const std::string &text) {
    for (PairMode m : {PairMode::whole_block, PairMode::bitwise, PairMode::bitwise_sequential}) {
        if (to_string(m) == text) {
            return m;
        }
    }
    throw ConfigError("unknown mode '" + text + "'");
}

RejectedPolicy parse_rejected_policy(const std::string &text) {
    for (RejectedPolicy p : {RejectedPolicy::abort, RejectedPolicy::discard_pair, RejectedPolicy::spread_report}) {
        if (to_string(p) == text) {
            return p;
        }
    }
    throw ConfigError("unknown rejected_policy '" + text + "'");
}

Schedule parse_schedule(const std::string &text) {
    for (Schedule s : {Schedule::round_robin, Schedule::global}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    throw ConfigError("unknown schedule '" + text + "'");
}

PauliConvention parse_convention(const std::string &text) {
    for (PauliConvention c : {PauliConvention::standard, PauliConvention::literal}) {
        if (to_string(c) == text) {
            return c;
        }
    }
    throw ConfigError("unknown convention '" + text + "'");
}

DriftAxis parse_drift_axis(const std::string &text) {
    for (DriftAxis a : {DriftAxis::z, DriftAxis::random}) {
        if (to_string(a) == text) {
            return a;
        }
    }
    throw ConfigError("unknown drift_axis '" + text + "'");
}

}  // namespace qsym

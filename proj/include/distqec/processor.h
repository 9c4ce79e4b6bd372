// Copyright 2026 The distqec Authors
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


#ifndef DISTQEC_PROCESSOR_H
#define DISTQEC_PROCESSOR_H

#include <memory>
#include <optional>
#include <vector>

#include "distqec/circuit.h"
#include "distqec/error_model.h"
#include "distqec/outcome_source.h"
#include "distqec/pauli_string.h"
#include "distqec/rng.h"
#include "distqec/state_vector.h"
#include "distqec/tableau.h"

namespace distqec {

/// Quantum state engine behind a Processor.
class Backend {
   public:
    virtual ~Backend() = default;
    virtual size_t num_qubits() const = 0;
    virtual void apply(GateKind gate, uint32_t a, uint32_t b) = 0;
    virtual void apply_pauli(const PauliString &p) = 0;
    virtual MeasureResult measure(const PauliString &observable, OutcomeSource &outcomes) = 0;
    virtual MeasureResult measure_z(uint32_t q, OutcomeSource &outcomes) = 0;
    virtual void reset(uint32_t q, OutcomeSource &outcomes) = 0;
    virtual std::optional<int> peek(const PauliString &observable) const = 0;
};

class TableauBackend : public Backend {
   public:
    explicit TableauBackend(size_t n) : state(n) {
    }
    size_t num_qubits() const override {
        return state.num_qubits();
    }
    void apply(GateKind gate, uint32_t a, uint32_t b) override {
        state.apply(gate, a, b);
    }
    void apply_pauli(const PauliString &p) override {
        state.apply_pauli(p);
    }
    MeasureResult measure(const PauliString &observable, OutcomeSource &outcomes) override {
        return state.measure(observable, outcomes);
    }
    MeasureResult measure_z(uint32_t q, OutcomeSource &outcomes) override {
        return state.measure_z(q, outcomes);
    }
    void reset(uint32_t q, OutcomeSource &outcomes) override {
        state.reset(q, outcomes);
    }
    std::optional<int> peek(const PauliString &observable) const override {
        return state.peek(observable);
    }

    Tableau state;
};

class StateVectorBackend : public Backend {
   public:
    explicit StateVectorBackend(size_t n) : state(n) {
    }
    size_t num_qubits() const override {
        return state.num_qubits();
    }
    void apply(GateKind gate, uint32_t a, uint32_t b) override {
        state.apply(gate, a, b);
    }
    void apply_pauli(const PauliString &p) override {
        state.apply_pauli(p);
    }
    MeasureResult measure(const PauliString &observable, OutcomeSource &outcomes) override {
        return state.measure(observable, outcomes);
    }
    MeasureResult measure_z(uint32_t q, OutcomeSource &outcomes) override {
        return state.measure_z(q, outcomes);
    }
    void reset(uint32_t q, OutcomeSource &outcomes) override {
        state.reset(q, outcomes);
    }
    /// +1 or -1 when the state is an eigenstate of the observable.
    std::optional<int> peek(const PauliString &observable) const override;

    StateVector state;
};

/// A fault forced at one location: `pauli` acts on the site's qubits, in
/// the order listed by FaultSite::qubits.
struct InjectedFault {
    size_t site = 0;
    PauliString pauli;
};

/// Counts of operations performed, for resource accounting.
struct OpCounts {
    size_t gates = 0;
    size_t measurements = 0;
    size_t resets = 0;
    size_t idles = 0;
    size_t bell_pairs = 0;
};

/// Executes protocol operations on a backend while numbering fault locations
/// and applying noise.
///
/// Every gate, measurement, reset, idle tick and Bell-pair delivery is a fault
/// location, numbered in execution order. Inside an `Ideal` scope operations
/// are neither numbered nor noisy; this is used for state preparation that is
/// assumed perfect and for readback. Corrections are classical frame updates
/// and never fault locations.
class Processor {
   public:
    Processor(std::unique_ptr<Backend> backend, Rng &rng, ErrorModel model = {});
    /// Tableau-backed processor on `n` qubits.
    Processor(size_t n, Rng &rng, ErrorModel model = {});

    size_t num_qubits() const {
        return backend_->num_qubits();
    }
    Backend &backend() {
        return *backend_;
    }
    const Backend &backend() const {
        return *backend_;
    }
    /// Throws std::logic_error when the backend is not of the requested kind.
    const Tableau &tableau() const;
    const StateVector &state_vector() const;

    Rng &rng() {
        return rng_;
    }
    const ErrorModel &model() const {
        return model_;
    }
    void set_model(const ErrorModel &model) {
        model.validate();
        model_ = model;
    }
    /// Replaces the source of random measurement outcomes (nullptr restores
    /// sampling from the processor's Rng).
    void set_outcome_source(OutcomeSource *source) {
        outcomes_ = source ? source : &rng_outcomes_;
    }

    void gate(GateKind g, uint32_t a, uint32_t b = 0);
    void h(uint32_t q) {
        gate(GateKind::H, q);
    }
    void cnot(uint32_t c, uint32_t t) {
        gate(GateKind::CNOT, c, t);
    }
    void cz(uint32_t a, uint32_t b) {
        gate(GateKind::CZ, a, b);
    }
    /// Controlled version of Pauli `p` ('X', 'Y' or 'Z').
    void controlled_pauli(char p, uint32_t control, uint32_t target) {
        gate(controlled_pauli_gate(p), control, target);
    }

    /// Z-basis measurement; returns the record bit (1 for the -1 outcome).
    bool measure(uint32_t q);
    /// X-basis measurement, performed as H then a Z measurement.
    bool measure_x(uint32_t q);
    /// Direct measurement of a multi-qubit Pauli; one fault location on its support.
    MeasureResult measure_pauli(const PauliString &observable);
    void reset(uint32_t q);
    /// One memory tick on an idle qubit.
    void idle(uint32_t q);
    /// Delivers (|00>+|11>)/sqrt(2) on the two qubits, which are first reset.
    void deliver_bell_pair(uint32_t a, uint32_t b);

    /// Noiseless Pauli frame update.
    void correct(const PauliString &p);
    void correct(char pauli, uint32_t q);

    /// Eigenvalue of a stabilizer-group element, without disturbing the state.
    std::optional<int> peek(const PauliString &observable) const {
        return backend_->peek(observable);
    }

    /// Forces a fault at the given location number (at most one per site).
    void inject(InjectedFault fault);
    void clear_injections() {
        injections_.clear();
    }
    /// True when stochastic noise or an injected fault may act.
    bool has_noise() const {
        return !model_.is_noiseless() || !injections_.empty();
    }
    /// When non-null, every fault location executed is appended here.
    void set_site_log(std::vector<FaultSite> *log) {
        site_log_ = log;
    }
    size_t sites_seen() const {
        return next_site_;
    }
    const OpCounts &counts() const {
        return counts_;
    }
    /// When non-null, executed steps are appended here (useful for printing).
    void set_trace(Circuit *trace) {
        trace_ = trace;
    }

    /// Suspends fault numbering and noise while alive.
    class Ideal {
       public:
        explicit Ideal(Processor &p) : p_(p) {
            p_.ideal_depth_++;
        }
        ~Ideal() {
            p_.ideal_depth_--;
        }
        Ideal(const Ideal &) = delete;
        Ideal &operator=(const Ideal &) = delete;

       private:
        Processor &p_;
    };
    bool is_ideal() const {
        return ideal_depth_ > 0;
    }

   private:
    /// Numbers a fault location and applies any injected fault there.
    void site(SiteKind kind, GateKind gate, std::initializer_list<uint32_t> qubits);
    void site(SiteKind kind, const std::vector<uint32_t> &qubits);
    void apply_injection(const std::vector<uint32_t> &qubits, const PauliString &local);
    void random_pauli_1(uint32_t q);
    void random_pauli_2(uint32_t a, uint32_t b);
    void pauli_on(uint32_t q, unsigned code);

    std::unique_ptr<Backend> backend_;
    Rng &rng_;
    RngOutcomes rng_outcomes_;
    OutcomeSource *outcomes_;
    ErrorModel model_;
    int ideal_depth_ = 0;
    size_t next_site_ = 0;
    std::vector<InjectedFault> injections_;
    std::vector<FaultSite> *site_log_ = nullptr;
    Circuit *trace_ = nullptr;
    OpCounts counts_;
};

/// Runs a circuit and returns its measurement record, indexed by record id.
/// Noise steps are applied as Paulis; other steps go through the processor.
std::vector<bool> run_circuit(Processor &processor, const Circuit &circuit);

struct OracleResult {
    StateVector state;
    std::vector<bool> records;
};

/// Dense simulation of `circuit` with outcomes sampled from Rng(seed).
/// Throws ResourceError beyond StateVector::kMaxQubits qubits.
OracleResult oracle_run(const Circuit &circuit, uint64_t seed);
/// Same, with outcomes drawn from `outcomes`.
OracleResult oracle_run(const Circuit &circuit, OutcomeSource &outcomes);

}  // namespace distqec

#endif

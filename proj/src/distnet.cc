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


#include "distqec/distnet.h"

#include <algorithm>

#include "distqec/residual.h"
#include "distqec/telegates.h"

using namespace distqec;

std::string distqec::node_preset_name(NodePreset p) {
    switch (p) {
        case NodePreset::NonFt:
            return "non-ft";
        case NodePreset::FtLocalSequential:
            return "ft-local";
        case NodePreset::FullFt:
            return "full-ft";
        case NodePreset::SteaneChip:
            return "steane-chip";
    }
    return "?";
}

NodePreset distqec::node_preset_by_name(const std::string &name) {
    for (auto p : {NodePreset::NonFt, NodePreset::FtLocalSequential, NodePreset::FullFt, NodePreset::SteaneChip}) {
        if (node_preset_name(p) == name) {
            return p;
        }
    }
    throw std::invalid_argument("unknown node preset '" + name +
                                "' (expected non-ft, ft-local, full-ft or steane-chip)");
}

namespace {

size_t max_generator_weight(const StabilizerCode &code) {
    size_t w = 0;
    for (const auto &g : code.generators) {
        w = std::max(w, g.weight());
    }
    return w;
}

size_t chain_length(const StabilizerCode &code) {
    return std::max(reduce_logical(code, 'X').weight(), reduce_logical(code, 'Z').weight());
}

}  // namespace

NodeSpec NodeSpec::make(NodePreset preset, const std::string &code_name, uint32_t node_id) {
    const auto &code = code_by_name(code_name);
    NodeSpec s;
    s.node_id = node_id;
    s.code = code.name;
    s.preset = preset;
    s.data_qubits = code.n;
    switch (preset) {
        case NodePreset::NonFt:
            s.local_ancilla = 1;
            s.interface_qubits = 1;
            break;
        case NodePreset::FtLocalSequential:
            s.local_ancilla = max_generator_weight(code) + 1;
            s.interface_qubits = 0;
            break;
        case NodePreset::FullFt:
            s.local_ancilla = max_generator_weight(code) + 1;
            s.interface_qubits = chain_length(code) + 1;
            break;
        case NodePreset::SteaneChip:
            if (code.name != "steane713") {
                throw std::invalid_argument("the steane-chip preset hosts the steane713 code only");
            }
            s.local_ancilla = 4 * code.n;
            s.interface_qubits = chain_length(code) + 1;
            break;
    }
    return s;
}

void LinkChannel::validate() const {
    if (!(p_success > 0 && p_success <= 1)) {
        throw std::invalid_argument("p_success must lie in (0, 1], got " + std::to_string(p_success));
    }
    if (!(t_attempt >= 0)) {
        throw std::invalid_argument("t_attempt must be non-negative");
    }
    if (!(bell_error >= 0 && bell_error <= 1)) {
        throw std::invalid_argument("bell_error must lie in [0, 1], got " + std::to_string(bell_error));
    }
}

LinkDelivery distqec::attempt_bell_link(const LinkChannel &channel, Rng &rng) {
    channel.validate();
    LinkDelivery d;
    d.attempts = rng.geometric(channel.p_success);
    d.duration = static_cast<double>(d.attempts) * channel.t_attempt;
    d.error = PauliString(2);
    if (channel.bell_error > 0 && rng.uniform() < channel.bell_error) {
        unsigned k = 1 + static_cast<unsigned>(rng.below(15));
        d.error.set(0, "IXYZ"[k & 3]);
        d.error.set(1, "IXYZ"[k >> 2]);
    }
    return d;
}

uint64_t EventTimeline::schedule(double time, Handler handler) {
    if (time < now_) {
        throw std::logic_error("event scheduled at " + std::to_string(time) + " before the current time " +
                               std::to_string(now_));
    }
    uint64_t seq = next_seq_++;
    queue_.push({time, seq, std::move(handler)});
    return seq;
}

bool EventTimeline::step() {
    if (queue_.empty()) {
        return false;
    }
    Event e = queue_.top();
    queue_.pop();
    now_ = e.time;
    e.handler();
    return true;
}

void EventTimeline::run_until(const std::function<bool()> &done) {
    while (!done() && step()) {
    }
}

Multiplexer::Multiplexer(std::vector<size_t> interface_qubits, size_t detectors)
    : capacity_(std::move(interface_qubits)), busy_(capacity_.size(), 0), detectors_(detectors) {
    if (detectors_ == 0) {
        throw std::invalid_argument("a multiplexer needs at least one detector");
    }
}

bool Multiplexer::fits(uint32_t a, uint32_t b) const {
    return active_.size() < detectors_ && busy_[a] < capacity_[a] && busy_[b] < capacity_[b];
}

void Multiplexer::activate(Reservation &r) {
    r.active = true;
    busy_[r.a]++;
    busy_[r.b]++;
    active_.push_back(r);
}

Multiplexer::Reservation Multiplexer::request(uint32_t a, uint32_t b) {
    if (a >= capacity_.size() || b >= capacity_.size()) {
        throw std::invalid_argument("link request names an unknown node");
    }
    if (a == b) {
        throw std::invalid_argument("a link needs two distinct nodes");
    }
    if (capacity_[a] == 0 || capacity_[b] == 0) {
        throw std::invalid_argument("node without interface qubits cannot hold a link");
    }
    Reservation r;
    r.id = next_id_++;
    r.a = a;
    r.b = b;
    if (fits(a, b)) {
        activate(r);
    } else {
        queue_.push_back(r);
    }
    return r;
}

std::vector<Multiplexer::Reservation> Multiplexer::release(uint64_t id) {
    auto it = std::find_if(active_.begin(), active_.end(), [id](const Reservation &r) { return r.id == id; });
    if (it == active_.end()) {
        throw std::invalid_argument("release of unknown reservation " + std::to_string(id));
    }
    busy_[it->a]--;
    busy_[it->b]--;
    active_.erase(it);
    std::vector<Reservation> started;
    for (auto q = queue_.begin(); q != queue_.end();) {
        if (fits(q->a, q->b)) {
            activate(*q);
            started.push_back(*q);
            q = queue_.erase(q);
        } else {
            ++q;
        }
    }
    return started;
}

std::vector<ScheduledLink> distqec::run_link_schedule(const std::vector<std::pair<uint32_t, uint32_t>> &requests,
                                                      std::vector<size_t> interface_qubits, size_t detectors,
                                                      const LinkChannel &channel, Rng &rng) {
    channel.validate();
    Multiplexer mux(std::move(interface_qubits), detectors);
    EventTimeline timeline;
    std::vector<ScheduledLink> out(requests.size());
    std::vector<size_t> slot_of_id(requests.size() + 1);
    std::function<void(const Multiplexer::Reservation &)> start = [&](const Multiplexer::Reservation &r) {
        auto &link = out[slot_of_id[r.id]];
        link.started = timeline.now();
        link.attempts = rng.geometric(channel.p_success);
        double done = timeline.now() + static_cast<double>(link.attempts) * channel.t_attempt;
        timeline.schedule(done, [&, id = r.id]() {
            out[slot_of_id[id]].delivered = timeline.now();
            for (const auto &next : mux.release(id)) {
                start(next);
            }
        });
    };
    for (size_t k = 0; k < requests.size(); k++) {
        auto r = mux.request(requests[k].first, requests[k].second);
        slot_of_id[r.id] = k;
        out[k].id = r.id;
        out[k].a = r.a;
        out[k].b = r.b;
        if (r.active) {
            start(r);
        }
    }
    while (timeline.step()) {
    }
    return out;
}

std::string distqec::ec_mode_name(EcMode m) {
    return m == EcMode::Basic ? "basic" : "ft";
}

EcMode distqec::ec_mode_by_name(const std::string &name) {
    if (name == "basic") {
        return EcMode::Basic;
    }
    if (name == "ft") {
        return EcMode::Ft;
    }
    throw std::invalid_argument("unknown ec_mode '" + name + "' (expected basic or ft)");
}

void BellPrepSetup::validate() const {
    channel.validate();
    noise.validate();
    if (!(ec_cycle_time > 0)) {
        throw std::invalid_argument("ec_cycle_time must be positive");
    }
    if (!(swap_error >= 0 && swap_error <= 1) || !(swap_time >= 0)) {
        throw std::invalid_argument("swap_error must lie in [0, 1] and swap_time must be non-negative");
    }
    auto spec = NodeSpec::make(preset, code);
    if (ec_mode == EcMode::Ft && spec.local_ancilla < max_generator_weight(code_by_name(code)) + 1) {
        throw std::invalid_argument("ec_mode ft needs a verified-GHZ ancilla register; preset " +
                                    node_preset_name(preset) + " has " + std::to_string(spec.local_ancilla) +
                                    " local ancilla");
    }
}

namespace {

struct NodeRegister {
    std::vector<uint32_t> data;
    std::vector<uint32_t> local;
    std::vector<uint32_t> interface;
};

NodeRegister allocate(const NodeSpec &spec, uint32_t first) {
    NodeRegister r;
    uint32_t q = first;
    for (size_t k = 0; k < spec.data_qubits; k++) {
        r.data.push_back(q++);
    }
    for (size_t k = 0; k < spec.local_ancilla; k++) {
        r.local.push_back(q++);
    }
    for (size_t k = 0; k < spec.interface_qubits; k++) {
        r.interface.push_back(q++);
    }
    return r;
}

class TimedLinks : public LinkProvider {
   public:
    TimedLinks(const BellPrepSetup &setup, EventTimeline &timeline, TrialRecord &record)
        : setup_(setup), timeline_(timeline), record_(record) {
    }

    BellLink request(Processor &processor, uint32_t a, uint32_t b) override {
        uint64_t attempts = processor.rng().geometric(setup_.channel.p_success);
        double duration = static_cast<double>(attempts) * setup_.channel.t_attempt;
        wait(duration);
        record_.link_attempts += attempts;
        record_.link_wait_time += duration;
        delivered_++;
        auto link = deliver_link(processor, a, b);
        if (setup_.swap_time > 0) {
            wait(setup_.swap_time);
        }
        if (setup_.swap_error > 0) {
            for (auto q : {a, b}) {
                if (processor.rng().uniform() < setup_.swap_error) {
                    processor.correct("XYZ"[processor.rng().below(3)], q);
                }
            }
        }
        return link;
    }

    void wait(double duration) {
        bool done = false;
        timeline_.schedule(timeline_.now() + duration, [&done]() { done = true; });
        timeline_.run_until([&done]() { return done; });
    }

   private:
    const BellPrepSetup &setup_;
    EventTimeline &timeline_;
    TrialRecord &record_;
};

}  // namespace

TrialRecord distqec::run_timed_bell_prep(const BellPrepSetup &setup, uint64_t seed, uint64_t trial) {
    setup.validate();
    const auto &code = code_by_name(setup.code);
    auto spec = NodeSpec::make(setup.preset, setup.code);
    auto total = static_cast<uint32_t>(spec.ledger_total());
    NodeRegister na = allocate(spec, 0), nb = allocate(spec, total);

    TrialRecord record;
    record.trial = trial;
    record.seed = seed;
    Rng rng = Rng::stream(seed, trial);
    ErrorModel model = setup.noise;
    model.bell_error = setup.channel.bell_error;
    Processor proc(2 * total, rng, model);
    {
        Processor::Ideal ideal(proc);
        encode_zero(proc, code, na.data);
        encode_zero(proc, code, nb.data);
    }

    FtOptions options;
    options.max_attempts = setup.max_attempts;
    options.rule = setup.rule;
    auto tick = [&]() {
        for (const auto *n : {&na, &nb}) {
            for (auto q : n->data) {
                proc.idle(q);
            }
        }
        std::string sa, sb;
        if (setup.ec_mode == EcMode::Ft) {
            sa = SyndromeRecord{ec_cycle_ft(proc, code, na.data, na.local, options).resolved,
                                code.num_generators()}
                     .str();
            sb = SyndromeRecord{ec_cycle_ft(proc, code, nb.data, nb.local, options).resolved,
                                code.num_generators()}
                     .str();
        } else {
            sa = ec_cycle_basic(proc, code, na.data, na.local.at(0)).str();
            sb = ec_cycle_basic(proc, code, nb.data, nb.local.at(0)).str();
        }
        record.syndromes_a.push_back(sa);
        record.syndromes_b.push_back(sb);
        record.ec_cycles++;
    };

    EventTimeline timeline;
    TimedLinks links(setup, timeline, record);
    std::function<void()> recurring = [&]() {
        tick();
        timeline.schedule(timeline.now() + setup.ec_cycle_time, recurring);
    };
    try {
        if (setup.fixed_ec_cycles) {
            for (size_t k = 0; k < *setup.fixed_ec_cycles; k++) {
                tick();
            }
        } else {
            timeline.schedule(setup.ec_cycle_time, recurring);
        }
        BellPrepResult r;
        if (na.interface.size() >= 2) {
            FtNode fa{na.data, na.local, {{na.interface.begin(), na.interface.end() - 1}, na.interface.back()}};
            FtNode fb{nb.data, nb.local, {{nb.interface.begin(), nb.interface.end() - 1}, nb.interface.back()}};
            r = prepare_encoded_bell_ft(proc, code, fa, fb, links, options);
        } else {
            uint32_t ha = na.interface.empty() ? na.local.at(0) : na.interface[0];
            uint32_t hb = nb.interface.empty() ? nb.local.at(0) : nb.interface[0];
            BellLink link = links.request(proc, ha, hb);
            NodeLayout la{na.data, na.local, {ha}}, lb{nb.data, nb.local, {hb}};
            r = prepare_encoded_bell_nonft(proc, code, la, lb, link, 0);
        }
        record.parity = r.parity;
        record.joint_repetitions = r.repetitions;
        record.verification_retries = r.verification_retries;
    } catch (const VerificationFailure &e) {
        record.aborted = true;
        record.abort_reason = e.what();
    }
    record.links_consumed = links.delivered();
    record.elapsed_time = timeline.now();
    if (record.aborted) {
        return record;
    }

    {
        Processor::Ideal ideal(proc);
        for (const auto *n : {&na, &nb}) {
            for (auto q : n->local) {
                proc.reset(q);
            }
            for (auto q : n->interface) {
                proc.reset(q);
            }
        }
    }
    std::vector<BlockRef> blocks{{&code, na.data}, {&code, nb.data}};
    auto stabilizers = encoded_bell_stabilizers(proc.num_qubits(), code, na.data, nb.data);
    std::vector<PauliString> targets(stabilizers.end() - 2, stabilizers.end());
    auto residual = analyze_residual(proc, blocks, targets);
    record.residual_weight = residual.weight;
    record.logical_error = residual.logical_error;
    return record;
}

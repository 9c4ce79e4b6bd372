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


#ifndef DISTQEC_DISTNET_H
#define DISTQEC_DISTNET_H

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "distqec/codes.h"
#include "distqec/error_model.h"
#include "distqec/fault_tolerance.h"
#include "distqec/rng.h"

namespace distqec {

/// Ion budgets of one trap node.
enum class NodePreset : uint8_t {
    /// Data block, one syndrome ancilla, one interface ion.
    NonFt,
    /// Data block and a verified-GHZ ancilla register that also hosts the
    /// Bell-link half (interface work is sequential).
    FtLocalSequential,
    /// Data block, verified-GHZ register and a 3 + 1 interface block.
    FullFt,
    /// Steane-code chip with room for the ancilla blocks of rapid Steane EC.
    SteaneChip,
};

std::string node_preset_name(NodePreset p);
NodePreset node_preset_by_name(const std::string &name);

struct NodeSpec {
    uint32_t node_id = 0;
    std::string code;
    NodePreset preset = NodePreset::NonFt;
    size_t data_qubits = 0;
    size_t local_ancilla = 0;
    size_t interface_qubits = 0;

    size_t ledger_total() const {
        return data_qubits + local_ancilla + interface_qubits;
    }

    /// Builds the preset layout for a registered code. Throws
    /// std::invalid_argument if the code cannot run on that preset.
    static NodeSpec make(NodePreset preset, const std::string &code, uint32_t node_id = 0);
};

/// Heralded probabilistic Bell-link source.
struct LinkChannel {
    double p_success = 1;
    double t_attempt = 1;
    double bell_error = 0;

    void validate() const;
};

/// Outcome of one heralded link generation.
struct LinkDelivery {
    uint64_t attempts = 0;
    /// Model time from the start of generation to the herald.
    double duration = 0;
    /// Pauli carried by the pair (identity when ideal), on halves (a, b).
    PauliString error;
};

/// Samples attempts ~ Geometric(p_success), duration = attempts * t_attempt,
/// and the pair's error.
LinkDelivery attempt_bell_link(const LinkChannel &channel, Rng &rng);

/// Discrete-event queue ordered by (time, scheduling order).
class EventTimeline {
   public:
    using Handler = std::function<void()>;

    double now() const {
        return now_;
    }
    size_t pending() const {
        return queue_.size();
    }
    /// Throws std::logic_error when `time` is earlier than now().
    uint64_t schedule(double time, Handler handler);
    /// Runs the earliest event; false when none is pending.
    bool step();
    /// Runs events until `done()` holds or the queue is empty.
    void run_until(const std::function<bool()> &done);

   private:
    struct Event {
        double time;
        uint64_t seq;
        Handler handler;
        bool operator>(const Event &o) const {
            return time != o.time ? time > o.time : seq > o.seq;
        }
    };
    double now_ = 0;
    uint64_t next_seq_ = 0;
    std::priority_queue<Event, std::vector<Event>, std::greater<>> queue_;
};

/// Optical multiplexer pairing arbitrary nodes with a limited number of
/// detectors and one link generation per interface ion.
class Multiplexer {
   public:
    struct Reservation {
        uint64_t id = 0;
        uint32_t a = 0;
        uint32_t b = 0;
        bool active = false;
    };

    /// `interface_qubits[k]` is the number of interface ions of node k.
    Multiplexer(std::vector<size_t> interface_qubits, size_t detectors);

    /// Reserves the pair if resources allow, otherwise queues it in FIFO
    /// order. Throws std::invalid_argument for unknown or equal nodes.
    Reservation request(uint32_t a, uint32_t b);
    /// Frees an active reservation and activates queued ones that now fit, in
    /// request order. Returns the newly activated reservations.
    std::vector<Reservation> release(uint64_t id);

    size_t active() const {
        return active_.size();
    }
    size_t queued() const {
        return queue_.size();
    }
    size_t in_flight(uint32_t node) const {
        return busy_.at(node);
    }
    size_t detectors() const {
        return detectors_;
    }

   private:
    bool fits(uint32_t a, uint32_t b) const;
    void activate(Reservation &r);

    std::vector<size_t> capacity_;
    std::vector<size_t> busy_;
    size_t detectors_;
    uint64_t next_id_ = 1;
    std::vector<Reservation> active_;
    std::deque<Reservation> queue_;
};

/// A completed link in a multiplexed schedule.
struct ScheduledLink {
    uint64_t id = 0;
    uint32_t a = 0;
    uint32_t b = 0;
    double requested = 0;
    double started = 0;
    double delivered = 0;
    uint64_t attempts = 0;
};

/// Generates links for pair requests issued at time 0, in order, through a
/// multiplexer; returns them in request order.
std::vector<ScheduledLink> run_link_schedule(const std::vector<std::pair<uint32_t, uint32_t>> &requests,
                                             std::vector<size_t> interface_qubits, size_t detectors,
                                             const LinkChannel &channel, Rng &rng);

enum class EcMode : uint8_t {
    Basic,
    Ft,
};

std::string ec_mode_name(EcMode m);
EcMode ec_mode_by_name(const std::string &name);

/// Everything a timed two-node Bell preparation needs.
struct BellPrepSetup {
    std::string code = "513";
    NodePreset preset = NodePreset::NonFt;
    LinkChannel channel;
    /// Circuit noise; the link's error comes from `channel.bell_error`.
    ErrorModel noise;
    EcMode ec_mode = EcMode::Basic;
    double ec_cycle_time = 10;
    size_t max_attempts = 10;
    MajorityRule rule = MajorityRule::WholeSyndrome;
    /// Run exactly this many EC ticks before the joint measurement instead of
    /// deriving them from the link wait.
    std::optional<size_t> fixed_ec_cycles;
    /// Cost of moving a delivered interface half into memory.
    double swap_error = 0;
    double swap_time = 0;

    void validate() const;
};

struct TrialRecord {
    uint64_t trial = 0;
    uint64_t seed = 0;
    double elapsed_time = 0;
    double link_wait_time = 0;
    size_t links_consumed = 0;
    uint64_t link_attempts = 0;
    size_t ec_cycles = 0;
    size_t verification_retries = 0;
    std::vector<int> joint_repetitions;
    int parity = 1;
    /// Resolved syndrome per EC tick, per node.
    std::vector<std::string> syndromes_a;
    std::vector<std::string> syndromes_b;
    size_t residual_weight = 0;
    bool logical_error = false;
    bool aborted = false;
    std::string abort_reason;

    bool operator==(const TrialRecord &) const = default;
};

/// One Monte Carlo trial: both nodes start in |0>_L (prepared ideally), EC
/// ticks run every `ec_cycle_time` while links are awaited, then the joint
/// X_L X_L measurement (fault-tolerant when the preset has an interface
/// block) and the Z_L fixup on node B. The logical-error flag comes from an
/// ideal decode of both blocks followed by a readout of X_L X_L and Z_L Z_L.
/// The trial's random stream is Rng::stream(seed, trial).
TrialRecord run_timed_bell_prep(const BellPrepSetup &setup, uint64_t seed, uint64_t trial);

}  // namespace distqec

#endif

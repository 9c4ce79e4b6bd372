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


#include "distqec/circuit.h"

#include <charconv>
#include <sstream>
#include <stdexcept>

using namespace distqec;

std::string_view distqec::site_kind_name(SiteKind kind) {
    switch (kind) {
        case SiteKind::Gate:
            return "gate";
        case SiteKind::Measure:
            return "measure";
        case SiteKind::Reset:
            return "reset";
        case SiteKind::Idle:
            return "idle";
        case SiteKind::Bell:
            return "bell";
    }
    return "?";
}

std::string FaultSite::label() const {
    std::string out = std::to_string(index) + ":";
    switch (kind) {
        case SiteKind::Gate:
            out += gate_name(gate);
            break;
        case SiteKind::Measure:
            out += "MZ";
            break;
        case SiteKind::Reset:
            out += "R";
            break;
        case SiteKind::Idle:
            out += "IDLE";
            break;
        case SiteKind::Bell:
            out += "BELL";
            break;
    }
    for (auto q : qubits) {
        out += " " + std::to_string(q);
    }
    return out;
}

void Circuit::check_qubit(uint32_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for a " + std::to_string(num_qubits_) +
                                "-qubit circuit");
    }
}

void Circuit::push(Step step) {
    switch (step.kind) {
        case StepKind::Gate:
            check_qubit(step.q0);
            if (is_two_qubit(step.gate)) {
                check_qubit(step.q1);
                if (step.q0 == step.q1) {
                    throw std::invalid_argument("two-qubit gate needs distinct qubits");
                }
            } else {
                step.q1 = 0;
            }
            if (step.noise && !is_pauli_gate(step.gate)) {
                throw std::invalid_argument("noise steps must be Paulis");
            }
            break;
        case StepKind::Measure:
            check_qubit(step.q0);
            if (step.record < num_records_) {
                throw std::invalid_argument("record r" + std::to_string(step.record) + " written twice");
            }
            num_records_ = step.record + 1;
            break;
        case StepKind::Reset:
        case StepKind::Idle:
            check_qubit(step.q0);
            break;
        case StepKind::Bell:
            check_qubit(step.q0);
            check_qubit(step.q1);
            if (step.q0 == step.q1) {
                throw std::invalid_argument("Bell pair needs distinct qubits");
            }
            break;
        case StepKind::Conditional:
            check_qubit(step.q0);
            if (!is_pauli_gate(step.gate)) {
                throw std::invalid_argument("conditional steps apply a Pauli");
            }
            if (step.condition.empty()) {
                throw std::invalid_argument("conditional step without records");
            }
            for (auto r : step.condition) {
                if (r >= num_records_) {
                    throw std::invalid_argument("conditional references record r" + std::to_string(r) +
                                                " before it is measured");
                }
            }
            break;
    }
    steps_.push_back(std::move(step));
}

void Circuit::gate(GateKind g, uint32_t a, uint32_t b) {
    Step s;
    s.kind = StepKind::Gate;
    s.gate = g;
    s.q0 = a;
    s.q1 = b;
    push(std::move(s));
}

uint32_t Circuit::measure(uint32_t q) {
    Step s;
    s.kind = StepKind::Measure;
    s.q0 = q;
    uint32_t record = static_cast<uint32_t>(num_records_);
    s.record = record;
    push(std::move(s));
    return record;
}

void Circuit::reset(uint32_t q) {
    Step s;
    s.kind = StepKind::Reset;
    s.q0 = q;
    push(std::move(s));
}

void Circuit::idle(uint32_t q) {
    Step s;
    s.kind = StepKind::Idle;
    s.q0 = q;
    push(std::move(s));
}

void Circuit::bell(uint32_t a, uint32_t b) {
    Step s;
    s.kind = StepKind::Bell;
    s.q0 = a;
    s.q1 = b;
    push(std::move(s));
}

void Circuit::conditional(std::vector<uint32_t> records, GateKind pauli, uint32_t q) {
    Step s;
    s.kind = StepKind::Conditional;
    s.gate = pauli;
    s.q0 = q;
    s.condition = std::move(records);
    push(std::move(s));
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::invalid_argument("appended circuit is wider than the target");
    }
    uint32_t offset = static_cast<uint32_t>(num_records_);
    for (Step s : other.steps_) {
        if (s.kind == StepKind::Measure) {
            s.record += offset;
        }
        for (auto &r : s.condition) {
            r += offset;
        }
        push(std::move(s));
    }
}

std::vector<FaultSite> Circuit::fault_locations() const {
    std::vector<FaultSite> out;
    for (const auto &s : steps_) {
        FaultSite site;
        site.index = out.size();
        switch (s.kind) {
            case StepKind::Gate:
                if (s.noise) {
                    continue;
                }
                site.kind = SiteKind::Gate;
                site.gate = s.gate;
                site.qubits = {s.q0};
                if (is_two_qubit(s.gate)) {
                    site.qubits.push_back(s.q1);
                }
                break;
            case StepKind::Measure:
                site.kind = SiteKind::Measure;
                site.qubits = {s.q0};
                break;
            case StepKind::Reset:
                site.kind = SiteKind::Reset;
                site.qubits = {s.q0};
                break;
            case StepKind::Idle:
                site.kind = SiteKind::Idle;
                site.qubits = {s.q0};
                break;
            case StepKind::Bell:
                site.kind = SiteKind::Bell;
                site.qubits = {s.q0, s.q1};
                break;
            case StepKind::Conditional:
                continue;
        }
        out.push_back(std::move(site));
    }
    return out;
}

Circuit Circuit::without_noise() const {
    Circuit out(num_qubits_);
    out.num_records_ = num_records_;
    for (const auto &s : steps_) {
        if (!s.noise) {
            out.steps_.push_back(s);
        }
    }
    return out;
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "QUBITS " << num_qubits_ << "\n";
    for (const auto &s : steps_) {
        switch (s.kind) {
            case StepKind::Gate:
                if (s.noise) {
                    out << "!";
                }
                out << gate_name(s.gate) << " " << s.q0;
                if (is_two_qubit(s.gate)) {
                    out << " " << s.q1;
                }
                break;
            case StepKind::Measure:
                out << "MZ " << s.q0 << " -> r" << s.record;
                break;
            case StepKind::Reset:
                out << "R " << s.q0;
                break;
            case StepKind::Idle:
                out << "IDLE " << s.q0;
                break;
            case StepKind::Bell:
                out << "BELL " << s.q0 << " " << s.q1;
                break;
            case StepKind::Conditional:
                out << "COND ";
                if (s.condition.size() == 1) {
                    out << "r" << s.condition[0];
                } else {
                    out << "parity(";
                    for (size_t k = 0; k < s.condition.size(); k++) {
                        out << (k ? "," : "") << "r" << s.condition[k];
                    }
                    out << ")";
                }
                out << " " << gate_name(s.gate) << " " << s.q0;
                break;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

struct LineError : std::invalid_argument {
    LineError(size_t line, const std::string &msg)
        : std::invalid_argument("circuit line " + std::to_string(line) + ": " + msg) {
    }
};

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) {
                out.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        out.push_back(std::move(cur));
    }
    return out;
}

uint32_t parse_uint(std::string_view text, size_t line) {
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw LineError(line, "expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return v;
}

uint32_t parse_record(std::string_view text, size_t line) {
    if (text.size() < 2 || text[0] != 'r') {
        throw LineError(line, "expected a record name like r3, got '" + std::string(text) + "'");
    }
    return parse_uint(text.substr(1), line);
}

std::vector<uint32_t> parse_condition(std::string_view text, size_t line) {
    std::vector<uint32_t> out;
    if (text.starts_with("parity(")) {
        if (!text.ends_with(")")) {
            throw LineError(line, "unterminated parity(...)");
        }
        std::string_view inner = text.substr(7, text.size() - 8);
        while (!inner.empty()) {
            size_t comma = inner.find(',');
            out.push_back(parse_record(inner.substr(0, comma), line));
            if (comma == std::string_view::npos) {
                break;
            }
            inner.remove_prefix(comma + 1);
        }
        if (out.empty()) {
            throw LineError(line, "empty parity(...)");
        }
    } else {
        out.push_back(parse_record(text, line));
    }
    return out;
}

}  // namespace

Circuit Circuit::parse(std::string_view text) {
    Circuit c;
    bool have_header = false;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        const std::string &op = words[0];
        auto expect = [&](size_t n) {
            if (words.size() != n) {
                throw LineError(line_no, "'" + op + "' expects " + std::to_string(n - 1) + " arguments");
            }
        };
        if (op == "QUBITS") {
            expect(2);
            if (have_header || !c.steps_.empty()) {
                throw LineError(line_no, "QUBITS must appear once, before any step");
            }
            c.num_qubits_ = parse_uint(words[1], line_no);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw LineError(line_no, "missing QUBITS header");
        }
        Step s;
        try {
            bool noise = op[0] == '!';
            std::string name = noise ? op.substr(1) : op;
            if (auto g = gate_from_name(name)) {
                s.kind = StepKind::Gate;
                s.gate = *g;
                s.noise = noise;
                expect(is_two_qubit(*g) ? 3 : 2);
                s.q0 = parse_uint(words[1], line_no);
                if (is_two_qubit(*g)) {
                    s.q1 = parse_uint(words[2], line_no);
                }
            } else if (noise) {
                throw LineError(line_no, "unknown noise Pauli '" + name + "'");
            } else if (op == "MZ") {
                expect(4);
                if (words[2] != "->") {
                    throw LineError(line_no, "expected 'MZ q -> rK'");
                }
                s.kind = StepKind::Measure;
                s.q0 = parse_uint(words[1], line_no);
                s.record = parse_record(words[3], line_no);
            } else if (op == "R" || op == "IDLE") {
                expect(2);
                s.kind = op == "R" ? StepKind::Reset : StepKind::Idle;
                s.q0 = parse_uint(words[1], line_no);
            } else if (op == "BELL") {
                expect(3);
                s.kind = StepKind::Bell;
                s.q0 = parse_uint(words[1], line_no);
                s.q1 = parse_uint(words[2], line_no);
            } else if (op == "COND") {
                expect(4);
                s.kind = StepKind::Conditional;
                s.condition = parse_condition(words[1], line_no);
                auto g = gate_from_name(words[2]);
                if (!g) {
                    throw LineError(line_no, "unknown gate '" + words[2] + "'");
                }
                s.gate = *g;
                s.q0 = parse_uint(words[3], line_no);
            } else {
                throw LineError(line_no, "unknown instruction '" + op + "'");
            }
            c.push(std::move(s));
        } catch (const LineError &) {
            throw;
        } catch (const std::exception &e) {
            throw LineError(line_no, e.what());
        }
    }
    return c;
}

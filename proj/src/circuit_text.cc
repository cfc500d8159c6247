// Copyright 2026 The zld Authors
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

#include "zld/circuit_text.h"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace zld {

namespace {

const char *role_name(QubitRole r) {
    switch (r) {
        case QubitRole::Data:
            return "data";
        case QubitRole::Ancilla:
            return "ancilla";
        case QubitRole::BoundaryAncilla:
            return "boundary-ancilla";
    }
    return "data";
}

QubitRole parse_role(const std::string &s) {
    if (s == "data") {
        return QubitRole::Data;
    }
    if (s == "ancilla") {
        return QubitRole::Ancilla;
    }
    if (s == "boundary-ancilla") {
        return QubitRole::BoundaryAncilla;
    }
    throw std::invalid_argument("Unknown qubit role '" + s + "'.");
}

const char *predicate_name(CheckPredicate p) {
    switch (p) {
        case CheckPredicate::ParityEven:
            return "parity-even";
        case CheckPredicate::ParityOdd:
            return "parity-odd";
        case CheckPredicate::AllEqual:
            return "all-equal";
    }
    return "parity-even";
}

CheckPredicate parse_predicate(const std::string &s) {
    if (s == "parity-even") {
        return CheckPredicate::ParityEven;
    }
    if (s == "parity-odd") {
        return CheckPredicate::ParityOdd;
    }
    if (s == "all-equal") {
        return CheckPredicate::AllEqual;
    }
    throw std::invalid_argument("Unknown check predicate '" + s + "'.");
}

GateKind parse_kind(const std::string &s, char *pauli) {
    static const GateKind kinds[] = {GateKind::PrepZ, GateKind::PrepX, GateKind::H,    GateKind::X,
                                     GateKind::Y,     GateKind::Z,     GateKind::S,    GateKind::Sdg,
                                     GateKind::A,     GateKind::Adg,   GateKind::CNOT, GateKind::MeasZ,
                                     GateKind::MeasX};
    for (GateKind k : kinds) {
        if (s == gate_name(k)) {
            return k;
        }
    }
    if (s.size() == 7 && s.rfind("CPauli", 0) == 0 && (s[6] == 'X' || s[6] == 'Y' || s[6] == 'Z')) {
        *pauli = s[6];
        return GateKind::CPauli;
    }
    throw std::invalid_argument("Unknown gate kind '" + s + "'.");
}

std::string trim(std::string_view s) {
    size_t a = 0;
    size_t b = s.size();
    while (a < b && isspace((unsigned char)s[a])) {
        a++;
    }
    while (b > a && isspace((unsigned char)s[b - 1])) {
        b--;
    }
    return std::string(s.substr(a, b - a));
}

uint32_t parse_rec(const std::string &tok) {
    if (tok.rfind("rec", 0) != 0) {
        throw std::invalid_argument("Expected recK, got '" + tok + "'.");
    }
    return (uint32_t)std::stoul(tok.substr(3));
}

struct Parser {
    Circuit c;

    uint32_t qubit(int row, int col, QubitRole role = QubitRole::Data) {
        uint32_t q = c.find_qubit(row, col);
        if (q != kNoQubit) {
            return q;
        }
        c.layout.push_back({row, col, role});
        return (uint32_t)c.layout.size() - 1;
    }

    std::pair<int, int> parse_coords(const std::string &tok) {
        int r = 0;
        int col = 0;
        char tail = 0;
        if (sscanf(tok.c_str(), "q(%d,%d%c", &r, &col, &tail) != 3 || tail != ')') {
            throw std::invalid_argument("Bad qubit token '" + tok + "'.");
        }
        return {r, col};
    }

    std::vector<uint32_t> parse_qubits(const std::string &tok) {
        std::vector<uint32_t> out;
        size_t start = 0;
        while (start < tok.size()) {
            size_t end = tok.find(')', start);
            if (end == std::string::npos) {
                throw std::invalid_argument("Bad qubit list '" + tok + "'.");
            }
            auto [r, col] = parse_coords(tok.substr(start, end + 1 - start));
            out.push_back(qubit(r, col));
            start = end + 1;
            if (start < tok.size() && tok[start] == ',') {
                start++;
            }
        }
        return out;
    }

    void directive(const std::string &line) {
        std::istringstream in(line.substr(2));
        std::string what;
        in >> what;
        if (what == "qubit") {
            std::string q;
            std::string role;
            in >> q >> role;
            auto [r, col] = parse_coords(q);
            qubit(r, col, parse_role(role));
        } else if (what == "record") {
            in >> c.record_len;
        } else if (what == "check") {
            AcceptanceCheck chk;
            std::string pred;
            in >> chk.name >> chk.stage >> pred;
            chk.predicate = parse_predicate(pred);
            std::string tok;
            while (in >> tok) {
                chk.slots.push_back(parse_rec(tok));
            }
            c.checks.push_back(chk);
        }
    }

    void moment(const std::string &line) {
        Moment m;
        std::string body = trim(line);
        if (body != ".") {
            std::stringstream parts(body);
            std::string part;
            while (std::getline(parts, part, ';')) {
                std::istringstream in(trim(part));
                std::string kind;
                std::string qs;
                in >> kind >> qs;
                Gate g;
                g.kind = parse_kind(kind, &g.pauli);
                auto targets = parse_qubits(qs);
                g.q0 = targets.at(0);
                if (g.kind == GateKind::CNOT) {
                    g.q1 = targets.at(1);
                }
                std::string tok;
                while (in >> tok) {
                    if (tok[0] == '?') {
                        std::stringstream conds(tok.substr(1));
                        std::string rec;
                        while (std::getline(conds, rec, '^')) {
                            g.condition.push_back(parse_rec(rec));
                        }
                    } else if (tok.rfind("->", 0) == 0) {
                        g.record = (int32_t)parse_rec(tok.substr(2));
                        if ((uint32_t)g.record >= c.record_len) {
                            c.record_len = (uint32_t)g.record + 1;
                        }
                    } else {
                        throw std::invalid_argument("Unexpected token '" + tok + "'.");
                    }
                }
                m.gates.push_back(g);
            }
        }
        c.moments.push_back(std::move(m));
    }
};

}  // namespace

std::string circuit_to_text(const Circuit &c) {
    std::ostringstream out;
    out << "# zld circuit\n";
    for (const auto &q : c.layout) {
        out << "#! qubit " << qubit_text(q) << " " << role_name(q.role) << "\n";
    }
    out << "#! record " << c.record_len << "\n";
    for (const auto &chk : c.checks) {
        out << "#! check " << chk.name << " " << chk.stage << " " << predicate_name(chk.predicate);
        for (uint32_t s : chk.slots) {
            out << " rec" << s;
        }
        out << "\n";
    }
    for (const auto &m : c.moments) {
        if (m.gates.empty()) {
            out << ".\n";
            continue;
        }
        bool first = true;
        for (const auto &g : m.gates) {
            out << (first ? "" : "; ");
            first = false;
            if (g.kind == GateKind::CPauli) {
                out << "CPauli" << g.pauli;
            } else {
                out << gate_name(g.kind);
            }
            out << " " << qubit_text(c.layout[g.q0]);
            if (g.is_two_qubit()) {
                out << "," << qubit_text(c.layout[g.q1]);
            }
            if (!g.condition.empty()) {
                out << " ?";
                for (size_t k = 0; k < g.condition.size(); k++) {
                    out << (k ? "^" : "") << "rec" << g.condition[k];
                }
            }
            if (g.record >= 0) {
                out << " ->rec" << g.record;
            }
        }
        out << "\n";
    }
    return out.str();
}

Circuit circuit_from_text(std::string_view text) {
    Parser p;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("#!", 0) == 0) {
            p.directive(line);
        } else if (trim(line).empty() || line[0] == '#') {
            continue;
        } else {
            p.moment(line);
        }
    }
    return p.c;
}

std::string circuit_to_json(const Circuit &c) {
    using nlohmann::json;
    json j;
    j["record_len"] = c.record_len;
    j["layout"] = json::array();
    for (const auto &q : c.layout) {
        j["layout"].push_back({{"row", q.row}, {"col", q.col}, {"role", role_name(q.role)}});
    }
    j["moments"] = json::array();
    for (const auto &m : c.moments) {
        json jm = json::array();
        for (const auto &g : m.gates) {
            json jg;
            jg["kind"] = gate_name(g.kind);
            jg["targets"] = json::array({json::array({c.layout[g.q0].row, c.layout[g.q0].col})});
            if (g.is_two_qubit()) {
                jg["targets"].push_back(json::array({c.layout[g.q1].row, c.layout[g.q1].col}));
            }
            if (g.record >= 0) {
                jg["record"] = g.record;
            }
            if (g.kind == GateKind::CPauli) {
                jg["pauli"] = std::string(1, g.pauli);
                jg["condition"] = g.condition;
            }
            jm.push_back(jg);
        }
        j["moments"].push_back(jm);
    }
    j["checks"] = json::array();
    for (const auto &chk : c.checks) {
        j["checks"].push_back(
            {{"name", chk.name}, {"stage", chk.stage}, {"predicate", predicate_name(chk.predicate)}, {"slots", chk.slots}});
    }
    return j.dump(1);
}

Circuit circuit_from_json(std::string_view text) {
    using nlohmann::json;
    json j = json::parse(text);
    Parser p;
    for (const auto &q : j.at("layout")) {
        p.qubit(q.at("row").get<int>(), q.at("col").get<int>(), parse_role(q.at("role").get<std::string>()));
    }
    p.c.record_len = j.at("record_len").get<uint32_t>();
    for (const auto &jm : j.at("moments")) {
        Moment m;
        for (const auto &jg : jm) {
            Gate g;
            g.kind = parse_kind(jg.at("kind").get<std::string>() == "CPauli"
                                    ? "CPauli" + jg.at("pauli").get<std::string>()
                                    : jg.at("kind").get<std::string>(),
                                &g.pauli);
            const auto &ts = jg.at("targets");
            g.q0 = p.qubit(ts.at(0).at(0).get<int>(), ts.at(0).at(1).get<int>());
            if (ts.size() > 1) {
                g.q1 = p.qubit(ts.at(1).at(0).get<int>(), ts.at(1).at(1).get<int>());
            }
            if (jg.contains("record")) {
                g.record = jg.at("record").get<int32_t>();
            }
            if (jg.contains("condition")) {
                g.condition = jg.at("condition").get<std::vector<uint32_t>>();
            }
            m.gates.push_back(g);
        }
        p.c.moments.push_back(std::move(m));
    }
    for (const auto &jc : j.at("checks")) {
        AcceptanceCheck chk;
        chk.name = jc.at("name").get<std::string>();
        chk.stage = jc.at("stage").get<int>();
        chk.predicate = parse_predicate(jc.at("predicate").get<std::string>());
        chk.slots = jc.at("slots").get<std::vector<uint32_t>>();
        p.c.checks.push_back(chk);
    }
    return p.c;
}

}  // namespace zld

#include "cyclicia/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace cyclicia {

namespace {

using nlohmann::json;

std::string term_str(MessageId id, int coeff, bool leading) {
    std::string out;
    const int mag = coeff < 0 ? -coeff : coeff;
    if (coeff < 0) {
        out += "-";
    } else if (!leading) {
        out += "+";
    }
    if (mag != 1) out += std::to_string(mag);
    out += id.str();
    return out;
}

}  // namespace

std::string render_combo(const SymbolicCombo& combo, int owner, bool owner_is_receiver) {
    if (combo.empty()) return "0";

    std::vector<std::pair<MessageId, int>> terms(combo.terms().begin(), combo.terms().end());
    auto is_primary = [&](const MessageId& id) {
        return owner_is_receiver ? id.rx == owner : id.tx == owner;
    };
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        const bool pa = is_primary(a.first), pb = is_primary(b.first);
        if (pa != pb) return pa;
        if (a.first.tx != b.first.tx) return a.first.tx < b.first.tx;
        return a.first.rx < b.first.rx;
    });

    std::string out;
    for (size_t t = 0; t < terms.size(); ++t) {
        out += term_str(terms[t].first, terms[t].second, t == 0);
    }
    return out;
}

std::string render_signal_table(const SimulationTrace& trace) {
    const int n = trace.ring.value();
    const size_t users = trace.transmits.size();

    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < users; ++i) {
        const auto& u = trace.transmits[i];
        labels.push_back("v_" + std::to_string(u.owner) + "(x)");
        std::vector<std::string> cells;
        cells.reserve(static_cast<size_t>(n));
        for (int s = 0; s < n; ++s) {
            cells.push_back(render_combo(u.slots[static_cast<size_t>(s)], u.owner, false));
        }
        rows.push_back(std::move(cells));
    }
    for (size_t j = 0; j < trace.receiveds.size(); ++j) {
        const auto& r = trace.receiveds[j];
        labels.push_back("r_" + std::to_string(r.owner) + "(x)");
        std::vector<std::string> cells;
        cells.reserve(static_cast<size_t>(n));
        for (int s = 0; s < n; ++s) {
            cells.push_back(render_combo(r.slots[static_cast<size_t>(s)], r.owner, true));
        }
        rows.push_back(std::move(cells));
    }

    std::vector<size_t> widths(static_cast<size_t>(n));
    size_t label_w = 0;
    for (const auto& l : labels) label_w = std::max(label_w, l.size());
    std::vector<std::string> headers;
    for (int s = 0; s < n; ++s) {
        headers.push_back("x^" + std::to_string(s));
        widths[static_cast<size_t>(s)] = headers.back().size();
    }
    for (const auto& row : rows) {
        for (int s = 0; s < n; ++s) {
            widths[static_cast<size_t>(s)] = std::max(widths[static_cast<size_t>(s)],
                                                      row[static_cast<size_t>(s)].size());
        }
    }

    auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size(), ' '); };
    std::ostringstream out;
    out << pad("", label_w);
    for (int s = 0; s < n; ++s) {
        out << " | " << pad(headers[static_cast<size_t>(s)], widths[static_cast<size_t>(s)]);
    }
    out << "\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        out << pad(labels[r], label_w);
        for (int s = 0; s < n; ++s) {
            out << " | " << pad(rows[r][static_cast<size_t>(s)], widths[static_cast<size_t>(s)]);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

const char* basis_name(DecodeBasis b) {
    switch (b) {
        case DecodeBasis::CleanSlot: return "clean";
        case DecodeBasis::AfterCancellation: return "cancellation";
        case DecodeBasis::BackhaulDelivery: return "backhaul";
    }
    return "?";
}

json violations_json(const ViolationSet& vs) {
    json out = json::array();
    for (const auto& v : vs.violations) {
        out.push_back({{"condition", v.condition.label()},
                       {"lhs", v.condition.lhs.str()},
                       {"rhs", v.condition.rhs.str()},
                       {"offset", v.lhs_value.value()}});
    }
    return out;
}

json constraints_json(const ConstraintReport& rep) {
    json out = json::array();
    for (const auto& e : rep.entries) {
        json witnesses = json::array();
        for (const auto& w : e.witnesses) witnesses.push_back(w.value());
        out.push_back({{"name", e.name}, {"holds", e.holds}, {"witnesses", witnesses}});
    }
    return out;
}

json decode_json(const SimulationTrace& trace) {
    json out = json::array();
    for (const auto& rec : trace.decodes) {
        for (const auto& e : rec.decoded) {
            out.push_back({{"id", e.id.str()},
                           {"rx", rec.rx},
                           {"slot", e.slot},
                           {"basis", basis_name(e.basis)}});
        }
    }
    return out;
}

json ledger_json(const SimulationTrace& trace) {
    json out = json::array();
    for (const auto& l : trace.ledger) {
        out.push_back({{"link", l.link},
                       {"content", l.content},
                       {"phase", l.pre_transmission ? "pre" : "post"},
                       {"rate", l.rate},
                       {"bits", l.bits}});
    }
    return out;
}

json decode_log_json(const SimulationTrace& trace) {
    json out = json::array();
    for (const auto& ev : trace.decode_log) {
        out.push_back({{"stage", ev.stage}, {"id", ev.id.str()}});
    }
    return out;
}

void describe_violations(std::ostringstream& out, const ViolationSet& vs) {
    if (vs.empty()) {
        out << "separability: all 42 conditions hold\n";
        return;
    }
    out << "separability: " << vs.size() << " violated condition(s)\n";
    for (const auto& v : vs.violations) {
        out << "  " << v.condition.label() << "  " << v.condition.lhs.str()
            << " = " << v.condition.rhs.str() << "  both land on x^" << v.lhs_value.value()
            << "\n";
    }
}

void describe_constraints(std::ostringstream& out, const ConstraintReport& rep) {
    out << "constraints (i)-(x):";
    if (rep.all_hold()) {
        out << " all hold\n";
    } else {
        out << " FAILED:";
        for (const auto& name : rep.failing()) out << " " << name;
        out << "\n";
    }
    for (const auto& e : rep.entries) {
        out << "  " << e.name << (e.holds ? "  holds  " : "  VIOLATED  ");
        for (size_t w = 0; w < e.witnesses.size(); ++w) {
            out << (w ? " , " : "") << e.witnesses[w].str();
        }
        out << "\n";
    }
}

void describe_decode(std::ostringstream& out, const SimulationTrace& trace) {
    for (const auto& rec : trace.decodes) {
        out << "Rx_" << rec.rx << " decodes:";
        bool any = false;
        for (const auto& e : rec.decoded) {
            out << " " << e.id.str() << "(" << basis_name(e.basis) << ")";
            any = true;
        }
        if (!any) out << " nothing";
        out << "\n";
    }
    out << "decoded " << trace.decoded_count << "/9, DoF = " << trace.dof.dof.str() << "\n";
}

}  // namespace

std::string certificate_to_json(const InfeasibilityCertificate& cert) {
    json j;
    j["ring"] = cert.ring;
    j["users"] = cert.users;
    j["channels_enumerated"] = cert.channels_enumerated;
    j["parameter_space"] = cert.parameter_space;
    j["nodes_visited"] = cert.nodes_visited;
    j["catalog_survivors"] = cert.catalog_survivors;
    j["feasible"] = cert.feasible;
    j["elapsed_seconds"] = cert.elapsed_seconds;
    j["jobs"] = cert.jobs;
    j["normalization"] = cert.normalization;
    j["infeasible"] = cert.infeasible();
    return j.dump(2) + "\n";
}

CommandResult run_verify(const Scenario& scenario) {
    const auto p = scenario.params();
    if (!p) throw ScenarioError("verify needs params_rx_by_tx (use solve to derive them)");
    const ShiftMatrix D = scenario.channel();

    const ViolationSet vs = check_all(D, *p, scenario.assignment);
    const ConstraintReport constraints = check_constraints(D, scenario.assignment);

    std::ostringstream text;
    json machine;
    machine["scheme"] = scheme_name(scenario.scheme);
    machine["violations"] = violations_json(vs);
    machine["constraints"] = constraints_json(constraints);

    describe_violations(text, vs);
    describe_constraints(text, constraints);

    bool met = false;
    std::string failure;
    try {
        const SimulationTrace trace = execute(plan_for(scenario.scheme, scenario.assignment), D,
                                              *p, scenario.payload_width, scenario.payload_seed);
        describe_decode(text, trace);
        machine["decoded"] = decode_json(trace);
        machine["decoded_count"] = trace.decoded_count;
        machine["dof"] = trace.dof.dof.str();
        machine["ledger"] = ledger_json(trace);
        machine["decode_log"] = decode_log_json(trace);
        machine["theta"] = {{"total", trace.backhaul_rate_total},
                            {"tx_side", trace.backhaul_rate_tx_side},
                            {"rx_side", trace.backhaul_rate_rx_side},
                            {"feedforward", trace.backhaul_rate_feedforward}};
        machine["payloads_bit_exact"] = trace.payloads_bit_exact;

        if (scenario.scheme == SchemeKind::None) {
            met = vs.empty() && trace.decoded_count == 9;
        } else {
            const int declared = plan_for(scenario.scheme, scenario.assignment).declared_backhaul_rate;
            met = trace.decoded_count == 9 && trace.payloads_bit_exact &&
                  trace.backhaul_rate_total == declared;
        }
    } catch (const PlanError& e) {
        failure = e.what();
        text << "plan failed: " << failure << "\n";
        machine["plan_error"] = failure;
    }

    machine["expectation_met"] = met;
    text << "scheme '" << scheme_name(scenario.scheme) << "' expectations "
         << (met ? "met" : "NOT met") << "\n";

    return CommandResult{met ? 0 : 1, text.str(), machine.dump(2) + "\n"};
}

CommandResult run_solve(const Scenario& scenario, int seed_pki) {
    const ShiftMatrix D = scenario.channel();
    const ConstraintReport constraints = check_constraints(D, scenario.assignment);

    std::ostringstream text;
    json machine;
    machine["constraints"] = constraints_json(constraints);

    if (!constraints.all_hold()) {
        describe_constraints(text, constraints);
        text << "cannot solve: channel fails the scheme constraints\n";
        machine["solved"] = false;
        return CommandResult{1, text.str(), machine.dump(2) + "\n"};
    }

    const ParamVector p = solve_parameters(D, scenario.assignment, seed_pki);

    // transmitter-major ordering (p_11, p_21, p_31, p_12, ..., p_33)
    std::vector<int> vec;
    text << "p = (";
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (!vec.empty()) text << ", ";
            text << p.exponent(j, i);
            vec.push_back(p.exponent(j, i));
        }
    }
    text << ")   order: (p_11, p_21, p_31, p_12, p_22, p_32, p_13, p_23, p_33)\n";

    machine["solved"] = true;
    machine["params_rx_by_tx"] = p.exponent_rows();
    machine["params_tx_major"] = vec;
    machine["seed_pki"] = seed_pki;
    return CommandResult{0, text.str(), machine.dump(2) + "\n"};
}

CommandResult run_simulate(const Scenario& scenario) {
    const auto p = scenario.params();
    if (!p) throw ScenarioError("simulate needs params_rx_by_tx (use solve to derive them)");
    const ShiftMatrix D = scenario.channel();

    std::ostringstream text;
    json machine;
    try {
        const SimulationTrace trace = execute(plan_for(scenario.scheme, scenario.assignment), D,
                                              *p, scenario.payload_width, scenario.payload_seed);
        const std::string table = render_signal_table(trace);
        text << table;
        if (!trace.ledger.empty()) {
            text << "backhaul:\n";
            for (const auto& l : trace.ledger) {
                text << "  " << l.link << "  " << l.content << "  ("
                     << (l.pre_transmission ? "pre" : "post") << "-transmission, rate " << l.rate
                     << ")\n";
            }
        }
        describe_decode(text, trace);

        machine["scheme"] = scheme_name(scenario.scheme);
        machine["n"] = scenario.n;
        json cells;
        for (const auto& u : trace.transmits) {
            json row = json::array();
            for (const auto& slot : u.slots) row.push_back(render_combo(slot, u.owner, false));
            cells["v_" + std::to_string(u.owner)] = row;
        }
        for (const auto& r : trace.receiveds) {
            json row = json::array();
            for (const auto& slot : r.slots) row.push_back(render_combo(slot, r.owner, true));
            cells["r_" + std::to_string(r.owner)] = row;
        }
        machine["cells"] = cells;
        machine["table"] = table;
        machine["decoded"] = decode_json(trace);
        machine["decoded_count"] = trace.decoded_count;
        machine["dof"] = trace.dof.dof.str();
        machine["ledger"] = ledger_json(trace);
        machine["decode_log"] = decode_log_json(trace);
        machine["payloads_bit_exact"] = trace.payloads_bit_exact;
        return CommandResult{0, text.str(), machine.dump(2) + "\n"};
    } catch (const PlanError& e) {
        text << "plan failed: " << e.what() << "\n";
        machine["plan_error"] = e.what();
        return CommandResult{1, text.str(), machine.dump(2) + "\n"};
    }
}

CommandResult run_prove(int n, int users, int jobs) {
    if (n > kMaxExhaustiveRing) {
        throw ScenarioError("exhaustive proof is guarded to n <= " +
                            std::to_string(kMaxExhaustiveRing));
    }
    if (users != 2 && users != 3) throw ScenarioError("--users must be 2 or 3");

    const InfeasibilityCertificate cert = users == 3 ? prove_infeasibility(RingSize(n), jobs)
                                                     : prove_two_user(RingSize(n), jobs);
    std::ostringstream text;
    text << "ring n=" << cert.ring << ", " << cert.users << "-user network\n"
         << "normalized space: " << cert.channels_enumerated << " channels x "
         << cert.parameter_space << " allocations\n"
         << "nodes visited: " << cert.nodes_visited
         << ", catalog survivors: " << cert.catalog_survivors << "\n"
         << "feasible configurations: " << cert.feasible << "\n"
         << "normalization: " << cert.normalization << "\n"
         << "elapsed: " << cert.elapsed_seconds << " s with " << cert.jobs << " worker(s)\n"
         << (cert.infeasible() ? "perfect cyclic IA is infeasible on this space\n"
                               : "feasible configurations exist\n");
    return CommandResult{cert.infeasible() ? 0 : 1, text.str(), certificate_to_json(cert)};
}

CommandResult run_sample(int n, int count, uint64_t seed) {
    const SampleResult sample = sample_valid_channels(RingSize(n), count, seed);

    std::ostringstream text;
    text << "found " << sample.channels.size() << " valid channel(s) in " << sample.attempts
         << (sample.exhaustive ? " scanned" : " sampled") << " candidates\n";
    for (const auto& D : sample.channels) {
        text << "  D =";
        for (const auto& row : D.exponent_rows()) {
            text << " [";
            for (size_t i = 0; i < row.size(); ++i) text << (i ? "," : "") << row[i];
            text << "]";
        }
        text << "\n";
    }

    json machine;
    machine["n"] = n;
    machine["found"] = sample.channels.size();
    machine["attempts"] = sample.attempts;
    machine["exhaustive"] = sample.exhaustive;
    json channels = json::array();
    for (const auto& D : sample.channels) channels.push_back(D.exponent_rows());
    machine["channels"] = channels;
    return CommandResult{0, text.str(), machine.dump(2) + "\n"};
}

}  // namespace cyclicia

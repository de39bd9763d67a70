#include "cyclicia/schemes.hpp"

#include <algorithm>
#include <functional>

namespace cyclicia {

namespace {

void require_assignment(std::array<int, 3> a) {
    for (int v : a) {
        if (v < 1 || v > 3) throw std::invalid_argument("role indices must be in 1..3");
    }
    if (a[0] == a[1] || a[0] == a[2] || a[1] == a[2]) {
        throw std::invalid_argument("role indices must be pairwise distinct");
    }
}

}  // namespace

bool ConstraintReport::all_hold() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ConstraintEntry& e) { return e.holds; });
}

const ConstraintEntry& ConstraintReport::entry(const std::string& name) const {
    for (const auto& e : entries) {
        if (e.name == name) return e;
    }
    throw std::invalid_argument("no constraint named " + name);
}

std::vector<std::string> ConstraintReport::failing() const {
    std::vector<std::string> out;
    for (const auto& e : entries) {
        if (!e.holds) out.push_back(e.name);
    }
    return out;
}

ConstraintReport check_constraints(const ShiftMatrix& D, std::array<int, 3> assignment) {
    require_assignment(assignment);
    if (D.users() != 3) throw std::invalid_argument("constraints are stated for K=3");
    const auto [i, j, k] = assignment;
    auto d = [&](int r, int c) { return D.at(r, c); };

    ConstraintReport rep;
    rep.assignment = assignment;

    {
        const Offset l = d(i, j) + d(k, i) + d(j, k);
        const Offset r = d(j, i) + d(i, k) + d(k, j);
        rep.entries.push_back({"(i)", l == r, {l, r}, "d_ij d_ki d_jk = d_ji d_ik d_kj"});
    }
    {
        const Offset a = d(i, i) + d(j, k) + d(k, j);
        const Offset b = d(j, j) + d(i, k) + d(k, i);
        const Offset c = d(k, k) + d(i, j) + d(j, i);
        rep.entries.push_back({"(ii)", a == b && b == c, {a, b, c},
                               "d_ii d_jk d_kj = d_jj d_ik d_ki = d_kk d_ij d_ji"});
    }

    struct MinorSpec {
        const char* name;
        std::pair<int, int> rows, cols;
    };
    const MinorSpec minors[] = {
        {"(iii)", {i, k}, {i, k}},  {"(iv)", {i, j}, {i, j}},
        {"(v)", {i, j}, {i, k}},    {"(vi)", {i, j}, {j, k}},
        {"(vii)", {k, j}, {k, i}},  {"(viii)", {k, j}, {k, j}},
    };
    for (const auto& ms : minors) {
        const Minor m = minor_of(D, ms.rows, ms.cols);
        rep.entries.push_back({ms.name, !m.is_zero(), {m.pos, m.neg},
                               "det(D_{" + std::to_string(ms.rows.first) + "," +
                                   std::to_string(ms.rows.second) + "," +
                                   std::to_string(ms.cols.first) + "," +
                                   std::to_string(ms.cols.second) + "}) != 0"});
    }

    {
        const Offset a = d(i, i) + d(j, j) + d(k, k);
        const Offset b = d(i, j) + d(j, k) + d(k, i);
        const Offset c = d(j, i) + d(k, j) + d(i, k);
        rep.entries.push_back({"(ix)", !(a == b) && b == c, {a, b, c},
                               "d_ii d_jj d_kk != d_ij d_jk d_ki = d_ji d_kj d_ik"});
    }
    {
        const Offset base = d(i, i) + d(j, j) + d(k, k);
        const Offset l0 = d(k, k) + base, r0 = d(j, k) + d(k, j) + d(i, k) + d(k, i);
        const Offset l1 = d(i, i) + base, r1 = d(i, j) + d(j, i) + d(i, k) + d(k, i);
        const Offset l2 = d(j, j) + base, r2 = d(i, j) + d(j, i) + d(j, k) + d(k, j);
        rep.entries.push_back({"(x)", !(l0 == r0) && !(l1 == r1) && !(l2 == r2),
                               {l0, r0, l1, r1, l2, r2},
                               "three scaled products stay apart"});
    }
    return rep;
}

ParamVector solve_parameters(const ShiftMatrix& D, std::array<int, 3> assignment,
                             int seed_pki) {
    require_assignment(assignment);
    const auto report = check_constraints(D, assignment);
    if (!report.all_hold()) {
        auto failed = report.failing();
        std::string what = "channel matrix violates scheme constraints:";
        for (const auto& f : failed) what += " " + f;
        throw ConstraintError(what, failed);
    }

    const auto [i, j, k] = assignment;
    const int n = D.ring().value();
    auto d = [&](int r, int c) { return D.exponent(r, c); };

    ParamVector p(3, D.ring());
    auto set = [&](int r, int c, long long v) { p.set(r, c, static_cast<int>(((v % n) + n) % n)); };
    auto get = [&](int r, int c) { return p.exponent(r, c); };

    // assignment chain of the adjacency graph, rooted at the seed p_ki
    set(k, i, seed_pki);
    set(j, j, get(k, i) + d(i, i) - d(i, j));  // from the second alignment at Rx_i
    set(k, k, get(k, i) + d(i, i) - d(i, k));
    set(k, j, get(k, i) + d(j, i) - d(j, j));  // from the Rx_j alignment row
    set(i, k, get(k, i) + d(j, i) - d(j, k));
    set(j, k, get(k, i) + d(k, i) - d(k, k));  // the deliberate leak at Rx_k
    set(i, i, get(k, k) + d(j, k) - d(j, i));
    set(j, i, get(k, j) + d(i, j) - d(i, i));
    set(i, j, get(j, k) + d(j, k) - d(j, j));  // the deliberate leak at Rx_j

    // dashed-edge relations must close; reachable only through a checker bug
    for (const auto& [lhs, rhs] : scheme_alignment_relations(assignment)) {
        if (!(evaluate_side(lhs, D, p) == evaluate_side(rhs, D, p))) {
            throw std::logic_error("alignment relation " + lhs.str() + " = " + rhs.str() +
                                   " failed on a channel passing (i)-(x)");
        }
    }
    if (!violations_are_intended_pair(check_all(D, p, assignment), assignment)) {
        throw std::logic_error("solved allocation does not leak exactly the two intended collisions");
    }
    return p;
}

std::string scheme_name(SchemeKind s) {
    switch (s) {
        case SchemeKind::None: return "none";
        case SchemeKind::FeedForward: return "ff";
        case SchemeKind::ReceiverCancellation: return "iac";
        case SchemeKind::TransmitterNeutralization: return "in";
        case SchemeKind::Combined: return "combined";
    }
    return "?";
}

std::optional<SchemeKind> parse_scheme(const std::string& name) {
    if (name == "none") return SchemeKind::None;
    if (name == "ff") return SchemeKind::FeedForward;
    if (name == "iac") return SchemeKind::ReceiverCancellation;
    if (name == "in") return SchemeKind::TransmitterNeutralization;
    if (name == "combined") return SchemeKind::Combined;
    return std::nullopt;
}

namespace {

std::string link_name(const char* prefix, int to, int from) {
    return std::string("theta_") + prefix + "," + std::to_string(to) + std::to_string(from);
}

}  // namespace

ExecutionPlan plan_none(std::array<int, 3> assignment) {
    require_assignment(assignment);
    return ExecutionPlan{SchemeKind::None, assignment, {}, {}, {}, 0};
}

ExecutionPlan plan_ff(std::array<int, 3> assignment) {
    require_assignment(assignment);
    const auto [i, j, k] = assignment;
    ExecutionPlan plan;
    plan.scheme = SchemeKind::FeedForward;
    plan.assignment = assignment;
    plan.transfers.push_back({NodeKind::Transmitter, k, NodeKind::Receiver, j,
                              SymbolicCombo::of({j, k}), true, link_name("FF", j, k)});
    // the forwarded message never rides the channel
    plan.precoding.push_back({MessageId{j, k}, SymbolicCombo{}});
    plan.declared_backhaul_rate = 1;
    return plan;
}

ExecutionPlan plan_iac(std::array<int, 3> assignment) {
    require_assignment(assignment);
    const auto [i, j, k] = assignment;
    ExecutionPlan plan;
    plan.scheme = SchemeKind::ReceiverCancellation;
    plan.assignment = assignment;
    plan.transfers.push_back({NodeKind::Receiver, i, NodeKind::Receiver, j,
                              SymbolicCombo::of({i, j}), false, link_name("R", j, i)});
    plan.transfers.push_back({NodeKind::Receiver, j, NodeKind::Receiver, k,
                              SymbolicCombo::of({j, k}), false, link_name("R", k, j)});
    plan.cancellations.push_back({j, MessageId{j, k},
                                  {{CancellationOperand::Source::Transfer, 0, {}, -1}},
                                  MessageId{j, k}, 0});
    plan.cancellations.push_back({k, MessageId{k, i},
                                  {{CancellationOperand::Source::Transfer, 1, {}, -1}},
                                  MessageId{k, i}, 1});
    plan.declared_backhaul_rate = 2;
    return plan;
}

ExecutionPlan plan_in(std::array<int, 3> assignment) {
    require_assignment(assignment);
    const auto [i, j, k] = assignment;
    ExecutionPlan plan;
    plan.scheme = SchemeKind::TransmitterNeutralization;
    plan.assignment = assignment;
    plan.transfers.push_back({NodeKind::Transmitter, j, NodeKind::Transmitter, k,
                              SymbolicCombo::of({i, j}), true, link_name("T", k, j)});
    plan.transfers.push_back({NodeKind::Transmitter, k, NodeKind::Transmitter, i,
                              SymbolicCombo::of({i, j}).minus(SymbolicCombo::of({j, k})), true,
                              link_name("T", i, k)});
    plan.precoding.push_back(
        {MessageId{j, k}, SymbolicCombo::of({j, k}).minus(SymbolicCombo::of({i, j}))});
    plan.precoding.push_back(
        {MessageId{k, i}, SymbolicCombo::of({k, i})
                              .plus(SymbolicCombo::of({i, j}))
                              .minus(SymbolicCombo::of({j, k}))});
    plan.declared_backhaul_rate = 2;
    return plan;
}

ExecutionPlan plan_combined(std::array<int, 3> assignment) {
    require_assignment(assignment);
    const auto [i, j, k] = assignment;
    ExecutionPlan plan;
    plan.scheme = SchemeKind::Combined;
    plan.assignment = assignment;
    plan.transfers.push_back({NodeKind::Transmitter, j, NodeKind::Transmitter, k,
                              SymbolicCombo::of({i, j}), true, link_name("T", k, j)});
    plan.transfers.push_back({NodeKind::Receiver, j, NodeKind::Receiver, k,
                              SymbolicCombo::of({j, k}).plus(SymbolicCombo::of({j, i})), false,
                              link_name("R", k, j)});
    plan.precoding.push_back(
        {MessageId{j, k}, SymbolicCombo::of({j, k}).minus(SymbolicCombo::of({i, j}))});
    // Rx_k folds the backhaul combination with its own aligned slot
    plan.cancellations.push_back(
        {k, MessageId{k, i},
         {{CancellationOperand::Source::Transfer, 1, {}, -1},
          {CancellationOperand::Source::OwnSlot, -1, MessageId{i, j}, +1}},
         MessageId{k, i}, 1});
    plan.declared_backhaul_rate = 2;
    return plan;
}

ExecutionPlan plan_for(SchemeKind scheme, std::array<int, 3> assignment) {
    switch (scheme) {
        case SchemeKind::None: return plan_none(assignment);
        case SchemeKind::FeedForward: return plan_ff(assignment);
        case SchemeKind::ReceiverCancellation: return plan_iac(assignment);
        case SchemeKind::TransmitterNeutralization: return plan_in(assignment);
        case SchemeKind::Combined: return plan_combined(assignment);
    }
    throw std::invalid_argument("unknown scheme");
}

const DecodeRecord& SimulationTrace::decode_at(int rx) const {
    for (const auto& r : decodes) {
        if (r.rx == rx) return r;
    }
    throw std::out_of_range("no decode record for receiver " + std::to_string(rx));
}

bool SimulationTrace::message_decoded(MessageId id) const {
    for (const auto& r : decodes) {
        if (r.rx == id.rx && r.has(id)) return true;
    }
    return false;
}

namespace {

struct KnowledgeItem {
    SymbolicCombo combo;
    Payload payload;
};

/// Tries to express `target` as a signed sum of knowledge items; returns the
/// XOR of the used payloads when possible.
std::optional<Payload> express(const std::vector<KnowledgeItem>& items,
                               const SymbolicCombo& target, int width) {
    Payload acc(width);
    SymbolicCombo remaining = target;
    std::optional<Payload> found;

    std::function<void(size_t)> dfs = [&](size_t idx) {
        if (found) return;
        if (remaining.empty()) {
            found = acc;
            return;
        }
        if (idx >= items.size()) return;
        // skip
        dfs(idx + 1);
        // add with either sign
        for (int sign : {-1, +1}) {
            if (found) return;
            remaining.add(items[idx].combo, -sign);
            acc ^= items[idx].payload;
            dfs(idx + 1);
            acc ^= items[idx].payload;
            remaining.add(items[idx].combo, sign);
        }
    };
    dfs(0);
    return found;
}

std::string render_combo_plain(const SymbolicCombo& combo) {
    if (combo.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [id, c] : combo.terms()) {
        const int mag = c < 0 ? -c : c;
        if (c < 0) {
            out += "-";
        } else if (!first) {
            out += "+";
        }
        if (mag != 1) out += std::to_string(mag);
        out += id.str();
        first = false;
    }
    return out;
}

}  // namespace

SimulationTrace execute(const ExecutionPlan& plan, const ShiftMatrix& D,
                        const ParamVector& p, int payload_width, uint64_t payload_seed) {
    require_assignment(plan.assignment);
    if (D.users() != 3 || p.users() != 3) {
        throw std::invalid_argument("execution requires the 3-user network");
    }
    if (!(D.ring() == p.ring())) {
        throw RingMismatchError("channel and allocation matrices use different rings");
    }
    if (static_cast<int>(plan.transfers.size()) != plan.declared_backhaul_rate) {
        throw PlanError("declared backhaul rate " + std::to_string(plan.declared_backhaul_rate) +
                        " does not match " + std::to_string(plan.transfers.size()) + " transfers");
    }
    const int users = 3;
    const int n = D.ring().value();

    SimulationTrace trace;
    trace.assignment = plan.assignment;
    trace.ring = D.ring();

    std::mt19937_64 rng(payload_seed);
    std::map<MessageId, Payload> original;
    for (int j = 1; j <= users; ++j) {
        for (int i = 1; i <= users; ++i) {
            Message m{MessageId{j, i}, Payload::random(payload_width, rng)};
            original[m.id] = m.payload;
            trace.originals.push_back(std::move(m));
        }
    }

    // phase validation: transmitter-to-transmitter content feeds precoding,
    // receiver-side content exists only after reception
    for (const auto& t : plan.transfers) {
        if (t.from_kind == NodeKind::Transmitter && t.to_kind == NodeKind::Transmitter &&
            !t.pre_transmission) {
            throw PlanError("transmitter-side transfer on " + t.link + " after transmission");
        }
        if (t.from_kind == NodeKind::Receiver && t.pre_transmission) {
            throw PlanError("receiver " + std::to_string(t.from) +
                            " cannot send on " + t.link + " before reception");
        }
        if (t.content.empty()) {
            throw PlanError("empty transfer content on " + t.link);
        }
        for (const auto& [id, c] : t.content.terms()) {
            if (id.rx < 1 || id.rx > users || id.tx < 1 || id.tx > users) {
                throw PlanError("transfer references unknown message " + id.str());
            }
        }
    }

    std::map<std::pair<NodeKind, int>, std::vector<KnowledgeItem>> knowledge;
    for (int i = 1; i <= users; ++i) {
        auto& items = knowledge[{NodeKind::Transmitter, i}];
        for (int j = 1; j <= users; ++j) {
            items.push_back({SymbolicCombo::of({j, i}), original.at({j, i})});
        }
    }

    std::vector<std::optional<std::pair<int, Payload>>> delivered(plan.transfers.size());

    auto send = [&](size_t idx) {
        const auto& t = plan.transfers[idx];
        const auto& sender = knowledge[{t.from_kind, t.from}];
        auto payload = express(sender, t.content, payload_width);
        if (!payload) {
            throw PlanError("sender of " + t.link + " cannot form " +
                            render_combo_plain(t.content) + " yet");
        }
        knowledge[{t.to_kind, t.to}].push_back({t.content, *payload});
        delivered[idx] = {t.to, *payload};
        trace.ledger.push_back({t.link, render_combo_plain(t.content), t.pre_transmission, 1,
                                payload_width});
        if (t.from_kind == NodeKind::Transmitter && t.to_kind == NodeKind::Transmitter) {
            trace.backhaul_rate_tx_side += 1;
        } else if (t.from_kind == NodeKind::Receiver && t.to_kind == NodeKind::Receiver) {
            trace.backhaul_rate_rx_side += 1;
        } else {
            trace.backhaul_rate_feedforward += 1;
        }
    };

    for (size_t idx = 0; idx < plan.transfers.size(); ++idx) {
        if (plan.transfers[idx].pre_transmission) send(idx);
    }

    // compose and precode
    std::vector<TransmitSignal> transmits;
    for (int i = 1; i <= users; ++i) {
        std::vector<Message> mine;
        for (int j = 1; j <= users; ++j) mine.push_back({MessageId{j, i}, original.at({j, i})});
        transmits.push_back(compose_transmit(p, i, mine));
    }
    for (const auto& sub : plan.precoding) {
        const int tx = sub.owner.tx;
        if (tx < 1 || tx > users) throw PlanError("precoding references unknown transmitter");
        auto& u = transmits[static_cast<size_t>(tx - 1)];
        const int slot = p.exponent(sub.owner.rx, tx);
        if (!(u.slots[static_cast<size_t>(slot)] == SymbolicCombo::of(sub.owner))) {
            throw PlanError("slot x^" + std::to_string(slot) + " of transmitter " +
                            std::to_string(tx) + " does not hold " + sub.owner.str() + " alone");
        }
        auto payload = express(knowledge[{NodeKind::Transmitter, tx}], sub.replacement,
                               payload_width);
        if (!payload) {
            throw PlanError("transmitter " + std::to_string(tx) + " cannot form replacement " +
                            render_combo_plain(sub.replacement));
        }
        u.slots[static_cast<size_t>(slot)] = sub.replacement;
        u.payloads[static_cast<size_t>(slot)] = *payload;
    }
    trace.transmits = transmits;

    for (int j = 1; j <= users; ++j) {
        trace.receiveds.push_back(propagate(D, transmits, j));
    }

    // initial decode: clean slots plus any single dedicated message already
    // delivered over a backhaul link
    auto known_messages = [&](int rx) {
        std::vector<Message> out;
        for (const auto& item : knowledge[{NodeKind::Receiver, rx}]) {
            if (auto term = item.combo.sole_term(); term && (term->second == 1 || term->second == -1)) {
                out.push_back({term->first, item.payload});
            }
        }
        return out;
    };

    trace.decodes.resize(static_cast<size_t>(users));
    auto run_plain_decode = [&](int rx) {
        auto known = known_messages(rx);
        DecodeRecord rec = decode(trace.receiveds[static_cast<size_t>(rx - 1)], known);
        // backhaul deliveries of dedicated messages decode directly
        for (const auto& m : known) {
            if (m.id.rx == rx && !rec.has(m.id)) {
                rec.decoded.push_back({m.id, -1, m.payload, DecodeBasis::BackhaulDelivery});
            }
        }
        // merge with anything already decoded in earlier stages
        auto& final_rec = trace.decodes[static_cast<size_t>(rx - 1)];
        final_rec.rx = rx;
        auto& items = knowledge[{NodeKind::Receiver, rx}];
        auto delivery_link = [&](MessageId id) -> std::string {
            for (const auto& t : plan.transfers) {
                if (t.to_kind == NodeKind::Receiver && t.to == rx &&
                    t.content == SymbolicCombo::of(id)) {
                    return t.link;
                }
            }
            return "backhaul";
        };
        for (auto& e : rec.decoded) {
            if (!final_rec.has(e.id)) {
                final_rec.decoded.push_back(e);
                trace.decode_log.push_back({e.basis == DecodeBasis::BackhaulDelivery
                                                ? delivery_link(e.id)
                                                : "initial",
                                            e.id});
            }
            const SymbolicCombo single = SymbolicCombo::of(e.id);
            const bool held = std::any_of(items.begin(), items.end(), [&](const KnowledgeItem& it) {
                return it.combo == single;
            });
            if (!held) items.push_back({single, e.payload});
        }
        final_rec.residuals = rec.residuals;
    };
    for (int j = 1; j <= users; ++j) run_plain_decode(j);

    auto arrival_slot = [&](int rx, MessageId via) {
        return (D.exponent(rx, via.tx) + p.exponent(via.rx, via.tx)) % n;
    };

    auto run_step = [&](const CancellationStep& step) {
        if (step.rx < 1 || step.rx > users) throw PlanError("cancellation at unknown receiver");
        const auto& r = trace.receiveds[static_cast<size_t>(step.rx - 1)];
        const int target = arrival_slot(step.rx, step.target_slot_via);
        SymbolicCombo combo = r.slots[static_cast<size_t>(target)];
        Payload payload = r.payloads[static_cast<size_t>(target)];
        for (const auto& op : step.operands) {
            if (op.source == CancellationOperand::Source::Transfer) {
                if (op.transfer_index < 0 ||
                    op.transfer_index >= static_cast<int>(plan.transfers.size())) {
                    throw PlanError("cancellation references transfer out of range");
                }
                const auto& slot = delivered[static_cast<size_t>(op.transfer_index)];
                if (!slot || slot->first != step.rx) {
                    throw PlanError("transfer " + std::to_string(op.transfer_index) +
                                    " was not delivered to receiver " + std::to_string(step.rx));
                }
                combo.add(plan.transfers[static_cast<size_t>(op.transfer_index)].content, op.sign);
                payload ^= slot->second;
            } else {
                const int s = arrival_slot(step.rx, op.slot_via);
                combo.add(r.slots[static_cast<size_t>(s)], op.sign);
                payload ^= r.payloads[static_cast<size_t>(s)];
            }
        }
        if (!combo.clean_for(step.decodes)) {
            throw PlanError("cancellation at receiver " + std::to_string(step.rx) +
                            " left " + render_combo_plain(combo) + " instead of " +
                            step.decodes.str());
        }
        auto& rec = trace.decodes[static_cast<size_t>(step.rx - 1)];
        if (!rec.has(step.decodes)) {
            rec.decoded.push_back({step.decodes, target, payload, DecodeBasis::AfterCancellation});
            const std::string stage =
                step.after_transfer >= 0
                    ? plan.transfers[static_cast<size_t>(step.after_transfer)].link
                    : "initial";
            trace.decode_log.push_back({stage, step.decodes});
        }
        knowledge[{NodeKind::Receiver, step.rx}].push_back({SymbolicCombo::of(step.decodes), payload});
    };

    for (const auto& step : plan.cancellations) {
        if (step.after_transfer < 0) run_step(step);
    }
    for (size_t idx = 0; idx < plan.transfers.size(); ++idx) {
        if (plan.transfers[idx].pre_transmission) continue;
        send(idx);
        for (const auto& step : plan.cancellations) {
            if (step.after_transfer == static_cast<int>(idx)) run_step(step);
        }
    }

    trace.backhaul_rate_total = trace.backhaul_rate_tx_side + trace.backhaul_rate_rx_side +
                                trace.backhaul_rate_feedforward;
    if (trace.backhaul_rate_total != plan.declared_backhaul_rate) {
        throw PlanError("ledger sum-rate differs from declared rate");
    }

    trace.payloads_bit_exact = true;
    for (const auto& rec : trace.decodes) {
        for (const auto& e : rec.decoded) {
            if (e.id.rx == rec.rx) {
                trace.decoded_count += 1;
                if (!(e.payload == original.at(e.id))) trace.payloads_bit_exact = false;
            }
        }
    }
    trace.dof = dof_of(trace.decoded_count, D.ring());
    return trace;
}

std::vector<std::pair<ConditionSide, ConditionSide>> scheme_alignment_relations(
    std::array<int, 3> assignment) {
    require_assignment(assignment);
    const auto [i, j, k] = assignment;
    auto via = [](int drx, int dtx, int prx, int ptx) {
        return ConditionSide{ChannelRef{drx, dtx}, ParamRef{prx, ptx}};
    };
    std::vector<std::pair<ConditionSide, ConditionSide>> rel;
    rel.emplace_back(via(i, i, j, i), via(i, j, k, j));  // interference row one at Rx_i
    rel.emplace_back(via(i, j, k, j), via(i, k, j, k));
    rel.emplace_back(via(i, i, k, i), via(i, j, j, j));  // interference row two at Rx_i
    rel.emplace_back(via(i, j, j, j), via(i, k, k, k));
    rel.emplace_back(via(j, i, k, i), via(j, j, k, j));  // aligned row at Rx_j
    rel.emplace_back(via(j, j, k, j), via(j, k, i, k));
    rel.emplace_back(via(j, i, i, i), via(j, k, k, k));
    rel.emplace_back(via(j, j, i, j), via(j, k, j, k));  // deliberate leak at Rx_j
    rel.emplace_back(via(k, i, i, i), via(k, j, j, j));  // aligned row at Rx_k
    rel.emplace_back(via(k, j, j, j), via(k, k, i, k));
    rel.emplace_back(via(k, j, i, j), via(k, i, j, i));
    rel.emplace_back(via(k, i, k, i), via(k, k, j, k));  // deliberate leak at Rx_k
    return rel;
}

std::array<std::pair<ConditionSide, ConditionSide>, 2> intended_collisions(
    std::array<int, 3> assignment) {
    require_assignment(assignment);
    const auto [i, j, k] = assignment;
    auto via = [](int drx, int dtx, int prx, int ptx) {
        return ConditionSide{ChannelRef{drx, dtx}, ParamRef{prx, ptx}};
    };
    return {std::pair{via(j, j, i, j), via(j, k, j, k)},
            std::pair{via(k, i, k, i), via(k, k, j, k)}};
}

bool violations_are_intended_pair(const ViolationSet& vs, std::array<int, 3> assignment) {
    if (vs.size() != 2) return false;
    const auto intended = intended_collisions(assignment);
    auto matches = [&](const Violation& v, const std::pair<ConditionSide, ConditionSide>& c) {
        return (v.condition.lhs == c.first && v.condition.rhs == c.second) ||
               (v.condition.lhs == c.second && v.condition.rhs == c.first);
    };
    const auto& a = vs.violations[0];
    const auto& b = vs.violations[1];
    return (matches(a, intended[0]) && matches(b, intended[1])) ||
           (matches(a, intended[1]) && matches(b, intended[0]));
}

}  // namespace cyclicia

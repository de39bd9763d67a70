#include "cyclicia/separability.hpp"

namespace cyclicia {

std::string ConditionSide::str() const {
    std::string p = "p_" + std::to_string(param.rx) + std::to_string(param.tx);
    if (!channel) return "x^" + p;
    return "d_" + std::to_string(channel->rx) + std::to_string(channel->tx) + " x^" + p;
}

std::string Condition::label() const {
    std::string out = "(" + std::to_string(source_eq) + ")";
    if (relabeling == Relabeling::Dagger) out += "+";
    if (relabeling == Relabeling::Star) out += "*";
    return out;
}

Offset evaluate_side(const ConditionSide& side, const ShiftMatrix& D, const ParamVector& p) {
    Offset v = p.at(side.param.rx, side.param.tx);
    if (side.channel) {
        v = v + D.at(side.channel->rx, side.channel->tx);
    }
    return v;
}

namespace {

void require_distinct(std::array<int, 3> a) {
    if (a[0] == a[1] || a[0] == a[2] || a[1] == a[2]) {
        throw std::invalid_argument("role assignment indices must be pairwise distinct");
    }
}

Condition make(ConditionKind kind, ConditionSide lhs, ConditionSide rhs,
               std::array<int, 3> roles, int eq, Relabeling rel) {
    return Condition{kind, lhs, rhs, roles, eq, rel};
}

}  // namespace

std::vector<Condition> enumerate_conditions(std::array<int, 3> assignment) {
    require_distinct(assignment);
    const auto [i, j, k] = assignment;
    const Relabeling rel = Relabeling::Base;

    auto bare = [](int rx, int tx) { return ConditionSide{std::nullopt, ParamRef{rx, tx}}; };
    auto via = [](int drx, int dtx, int prx, int ptx) {
        return ConditionSide{ChannelRef{drx, dtx}, ParamRef{prx, ptx}};
    };

    std::vector<Condition> out;
    out.reserve(14);

    // intra-user at Tx_i
    out.push_back(make(ConditionKind::IntraUser, bare(j, i), bare(k, i), assignment, 5, rel));
    out.push_back(make(ConditionKind::IntraUser, bare(i, i), bare(j, i), assignment, 6, rel));
    out.push_back(make(ConditionKind::IntraUser, bare(i, i), bare(k, i), assignment, 7, rel));

    // multiple-access at Rx_i
    out.push_back(make(ConditionKind::MultipleAccess, via(i, j, i, j), via(i, k, i, k), assignment, 8, rel));
    out.push_back(make(ConditionKind::MultipleAccess, via(i, i, i, i), via(i, j, i, j), assignment, 9, rel));
    out.push_back(make(ConditionKind::MultipleAccess, via(i, i, i, i), via(i, k, i, k), assignment, 10, rel));

    // inter-user at Rx_i
    out.push_back(make(ConditionKind::InterUser, via(i, i, i, i), via(i, j, k, j), assignment, 11, rel));
    out.push_back(make(ConditionKind::InterUser, via(i, i, i, i), via(i, j, j, j), assignment, 12, rel));
    out.push_back(make(ConditionKind::InterUser, via(i, i, i, i), via(i, k, j, k), assignment, 13, rel));
    out.push_back(make(ConditionKind::InterUser, via(i, i, i, i), via(i, k, k, k), assignment, 14, rel));
    out.push_back(make(ConditionKind::InterUser, via(i, j, i, j), via(i, i, j, i), assignment, 15, rel));
    out.push_back(make(ConditionKind::InterUser, via(i, j, i, j), via(i, i, k, i), assignment, 16, rel));
    out.push_back(make(ConditionKind::InterUser, via(i, j, i, j), via(i, k, j, k), assignment, 17, rel));
    out.push_back(make(ConditionKind::InterUser, via(i, j, i, j), via(i, k, k, k), assignment, 18, rel));

    return out;
}

std::vector<Condition> full_catalog(std::array<int, 3> base) {
    require_distinct(base);
    const std::array<std::array<int, 3>, 3> rotations = {{
        {base[0], base[1], base[2]},
        {base[1], base[2], base[0]},
        {base[2], base[0], base[1]},
    }};
    std::vector<Condition> out;
    out.reserve(42);
    for (int r = 0; r < 3; ++r) {
        for (auto& c : enumerate_conditions(rotations[static_cast<size_t>(r)])) {
            c.relabeling = static_cast<Relabeling>(r);
            out.push_back(c);
        }
    }
    return out;
}

ViolationSet check_all(const ShiftMatrix& D, const ParamVector& p, std::array<int, 3> base) {
    if (D.users() != 3 || p.users() != 3) {
        throw std::invalid_argument("separability catalog is stated for K=3");
    }
    if (!(D.ring() == p.ring())) {
        throw RingMismatchError("channel and allocation matrices use different rings");
    }
    ViolationSet out;
    for (const auto& cond : full_catalog(base)) {
        const Offset l = evaluate_side(cond.lhs, D, p);
        const Offset r = evaluate_side(cond.rhs, D, p);
        if (l == r) {
            out.violations.push_back({cond, l, r});
        }
    }
    return out;
}

}  // namespace cyclicia

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cyclicia/ring.hpp"

namespace cyclicia {

enum class ConditionKind {
    IntraUser,       ///< same-transmitter allocations must differ
    MultipleAccess,  ///< dedicated arrivals at one receiver must differ
    InterUser,       ///< dedicated arrival vs cross-transmitter interference
};

/// Which circular relabelling of the base role assignment a condition
/// belongs to: base, dagger (i->j->k->i) or star (i->k->j->i).
enum class Relabeling { Base = 0, Dagger = 1, Star = 2 };

/// Reference into the channel matrix D (receiver, transmitter).
struct ChannelRef {
    int rx = 0;
    int tx = 0;
    friend bool operator==(const ChannelRef&, const ChannelRef&) = default;
};

/// Reference into the allocation matrix p (message receiver, transmitter).
struct ParamRef {
    int rx = 0;
    int tx = 0;
    friend bool operator==(const ParamRef&, const ParamRef&) = default;
};

/// One side of a condition: an optional channel shift applied to an
/// allocation, i.e. the arrival offset d_ref * x^{p_ref} (or the bare
/// allocation x^{p_ref} for intra-user conditions).
struct ConditionSide {
    std::optional<ChannelRef> channel;
    ParamRef param;

    friend bool operator==(const ConditionSide&, const ConditionSide&) = default;

    std::string str() const;
};

/// A separability condition lhs != rhs (as offsets mod n). Conditions are
/// data, not closures, so violations can be reported symbolically.
struct Condition {
    ConditionKind kind = ConditionKind::IntraUser;
    ConditionSide lhs;
    ConditionSide rhs;
    std::array<int, 3> roles{};  ///< concrete (i,j,k) the condition was instantiated with
    int source_eq = 0;           ///< 5..18
    Relabeling relabeling = Relabeling::Base;

    /// e.g. "(16)", "(16)+" for dagger, "(16)*" for star
    std::string label() const;
};

Offset evaluate_side(const ConditionSide& side, const ShiftMatrix& D, const ParamVector& p);

/// The 14 conditions for one concrete role assignment (i,j,k):
/// 3 intra-user at Tx_i, 3 multiple-access at Rx_i, 8 inter-user at Rx_i.
std::vector<Condition> enumerate_conditions(std::array<int, 3> assignment);

/// The full catalog for K=3: the 14 conditions under the base assignment
/// and its two circular relabellings, 42 in total.
std::vector<Condition> full_catalog(std::array<int, 3> base = {1, 2, 3});

struct Violation {
    Condition condition;
    Offset lhs_value;
    Offset rhs_value;  ///< equals lhs_value whenever the condition is violated
};

struct ViolationSet {
    std::vector<Violation> violations;

    bool empty() const { return violations.empty(); }
    size_t size() const { return violations.size(); }
};

/// Evaluates the full 42-condition catalog for (D, p); every violated
/// condition is returned with the colliding offset on both sides.
ViolationSet check_all(const ShiftMatrix& D, const ParamVector& p,
                       std::array<int, 3> base = {1, 2, 3});

}  // namespace cyclicia

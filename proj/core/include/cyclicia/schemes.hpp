#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclicia/cpcm.hpp"
#include "cyclicia/ring.hpp"
#include "cyclicia/separability.hpp"

namespace cyclicia {

/// Thrown when a channel matrix fails the scheme constraints.
struct ConstraintError : std::runtime_error {
    explicit ConstraintError(const std::string& what, std::vector<std::string> failed = {})
        : std::runtime_error(what), failed_constraints(std::move(failed)) {}
    std::vector<std::string> failed_constraints;
};

/// Thrown when an execution plan is inconsistent with the scenario
/// (phase violations, unavailable backhaul content, bad cancellation).
struct PlanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One of the ten channel constraints. (i) and (ii) are equalities and hold
/// when all witnesses coincide; (iii)-(viii) are nonzero minors; (ix) mixes
/// an inequality with an equality; (x) is three inequalities.
struct ConstraintEntry {
    std::string name;  ///< "(i)".."(x)"
    bool holds = false;
    std::vector<Offset> witnesses;
    std::string detail;
};

struct ConstraintReport {
    std::array<int, 3> assignment{};
    std::vector<ConstraintEntry> entries;

    bool all_hold() const;
    const ConstraintEntry& entry(const std::string& name) const;
    std::vector<std::string> failing() const;
};

/// Evaluates constraints (i)-(x) for the roles (i,j,k).
ConstraintReport check_constraints(const ShiftMatrix& D, std::array<int, 3> assignment);

/// Derives all nine allocations from the seed p_ki by the assignment chain
/// of the adjacency graph, then verifies the remaining (dashed) alignment
/// relations and that the separability catalog reports exactly the two
/// intended collisions. Throws ConstraintError when the channel fails
/// (i)-(x); a residual failure afterwards is a hard fault (logic_error).
ParamVector solve_parameters(const ShiftMatrix& D, std::array<int, 3> assignment,
                             int seed_pki = 0);

enum class SchemeKind { None, FeedForward, ReceiverCancellation, TransmitterNeutralization, Combined };

std::string scheme_name(SchemeKind s);
std::optional<SchemeKind> parse_scheme(const std::string& name);

enum class NodeKind { Transmitter, Receiver };

struct BackhaulTransfer {
    NodeKind from_kind = NodeKind::Transmitter;
    int from = 0;
    NodeKind to_kind = NodeKind::Receiver;
    int to = 0;
    SymbolicCombo content;
    bool pre_transmission = false;
    std::string link;  ///< e.g. "theta_R,32"
};

/// Replaces the content of the slot that message `owner` occupies at its
/// transmitter. An empty replacement leaves the slot silent.
struct PrecodingSubstitution {
    MessageId owner;
    SymbolicCombo replacement;
};

struct CancellationOperand {
    enum class Source { Transfer, OwnSlot };
    Source source = Source::Transfer;
    int transfer_index = -1;  ///< for Source::Transfer
    MessageId slot_via;       ///< for Source::OwnSlot: the slot where this message lands
    int sign = -1;
};

/// Combines the target slot with backhaul items and other slots of the same
/// receiver; the result must be exactly +/- the decoded message.
struct CancellationStep {
    int rx = 0;
    MessageId target_slot_via;  ///< slot addressed by where this message arrives
    std::vector<CancellationOperand> operands;
    MessageId decodes;
    int after_transfer = -1;  ///< runs once this transfer is delivered
};

struct ExecutionPlan {
    SchemeKind scheme = SchemeKind::None;
    std::array<int, 3> assignment{1, 2, 3};
    std::vector<BackhaulTransfer> transfers;
    std::vector<PrecodingSubstitution> precoding;
    std::vector<CancellationStep> cancellations;
    int declared_backhaul_rate = 0;  ///< Theta, one message of t bits = rate 1
};

ExecutionPlan plan_none(std::array<int, 3> assignment = {1, 2, 3});
ExecutionPlan plan_ff(std::array<int, 3> assignment = {1, 2, 3});
ExecutionPlan plan_iac(std::array<int, 3> assignment = {1, 2, 3});
ExecutionPlan plan_in(std::array<int, 3> assignment = {1, 2, 3});
ExecutionPlan plan_combined(std::array<int, 3> assignment = {1, 2, 3});
ExecutionPlan plan_for(SchemeKind scheme, std::array<int, 3> assignment = {1, 2, 3});

struct LedgerEntry {
    std::string link;
    std::string content;
    bool pre_transmission = false;
    int rate = 1;  ///< messages of t bits
    int bits = 0;  ///< rate * t
};

/// One decoding event in execution order: the stage is "initial" for the
/// plain decode pass, the backhaul link name for deliveries and
/// post-cancellation decodes.
struct DecodeEvent {
    std::string stage;
    MessageId id;
};

struct SimulationTrace {
    std::array<int, 3> assignment{};
    RingSize ring{1};
    std::vector<Message> originals;          ///< the nine source messages
    std::vector<TransmitSignal> transmits;   ///< post-precoding
    std::vector<ReceivedSignal> receiveds;
    std::vector<DecodeRecord> decodes;       ///< one per receiver, final state
    std::vector<DecodeEvent> decode_log;     ///< per-stage decoding order
    std::vector<LedgerEntry> ledger;
    int backhaul_rate_total = 0;             ///< must equal the plan's declared rate
    int backhaul_rate_tx_side = 0;
    int backhaul_rate_rx_side = 0;
    int backhaul_rate_feedforward = 0;
    int decoded_count = 0;
    DofReport dof;
    bool payloads_bit_exact = false;  ///< every decoded payload equals its original

    const DecodeRecord& decode_at(int rx) const;
    bool message_decoded(MessageId id) const;
};

/// Runs a plan against a concrete (D, p) scenario with seeded random
/// payloads and returns the full trace. Validates plan phases, backhaul
/// content availability in sequence order, and cancellation correctness.
SimulationTrace execute(const ExecutionPlan& plan, const ShiftMatrix& D,
                        const ParamVector& p, int payload_width = 8,
                        uint64_t payload_seed = 1);

/// The eight alignment relations of the scheme as (lhs, rhs) side pairs;
/// three-way relations contribute two pairs each, twelve pairs in total.
/// Used to verify a solved allocation satisfies the scheme exactly.
std::vector<std::pair<ConditionSide, ConditionSide>> scheme_alignment_relations(
    std::array<int, 3> assignment);

/// The two collisions the scheme introduces deliberately: the leak on
/// W_jk's slot at Rx_j and on W_ki's slot at Rx_k. Matching violations by
/// these evaluated side pairs is robust to catalog relabelling.
std::array<std::pair<ConditionSide, ConditionSide>, 2> intended_collisions(
    std::array<int, 3> assignment);

/// True when the violation set consists of exactly the two intended
/// collisions of the scheme (matched by the colliding sides, not labels).
bool violations_are_intended_pair(const ViolationSet& vs, std::array<int, 3> assignment);

}  // namespace cyclicia

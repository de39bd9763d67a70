#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclicia/ring.hpp"

namespace cyclicia {

/// Largest ring size the exhaustive searches accept. Beyond this the
/// normalized space stops being desk-scale.
inline constexpr int kMaxExhaustiveRing = 7;

/// Outcome of an exhaustive feasibility search over the normalized space
/// (channel rows scaled so the diagonal is x^0, first allocation pinned
/// to 0). Feasible means every dedicated message arrives interference-free.
struct InfeasibilityCertificate {
    int ring = 0;
    int users = 3;
    long long channels_enumerated = 0;  ///< n^(off-diagonal entries)
    long long parameter_space = 0;      ///< n^(free allocations), before pruning
    long long nodes_visited = 0;        ///< partial assignments surviving their checks
    long long catalog_survivors = 0;    ///< complete assignments passing all 42 conditions
    long long feasible = 0;             ///< complete assignments with all messages clean
    double elapsed_seconds = 0.0;
    int jobs = 1;
    std::string normalization;

    bool infeasible() const { return feasible == 0; }
};

/// Per-channel slice of the K=3 search; exposed so single channels can be
/// cross-checked against reference enumerations.
struct ChannelSearchStats {
    long long nodes_visited = 0;
    long long catalog_survivors = 0;
    long long feasible = 0;
};

/// True iff every dedicated message W_jj..W_ji lands alone in its slot at
/// its own receiver. Works for any K; positional check, independent of the
/// condition catalog.
bool dedicated_all_clean(const ShiftMatrix& D, const ParamVector& p);

/// Number of dedicated messages that arrive interference-free.
int clean_dedicated_count(const ShiftMatrix& D, const ParamVector& p);

/// Backtracking search over one normalized channel: allocations are
/// assigned transmitter-major with incremental evaluation of the 42-entry
/// separability catalog and pruning on the first violation; surviving
/// complete assignments are then checked for full cleanliness.
ChannelSearchStats search_channel(const ShiftMatrix& D_normalized);

/// Exhaustive infeasibility certification for the 3-user network at ring
/// size n <= 7. Deterministic: worker partitioning never changes counts.
InfeasibilityCertificate prove_infeasibility(RingSize n, int jobs = 1);

/// Independent 2-user brute force (no pruning, no condition catalog) over
/// the normalized space d11=d22=d12=0, p11=0. Used as the sanity inversion:
/// feasible configurations exist here.
InfeasibilityCertificate prove_two_user(RingSize n, int jobs = 1);

/// A signal aligned at some receiver: message W_{msg_rx, tx}.
struct AlignedSignal {
    int msg_rx = 0;
    int tx = 0;
    auto operator<=>(const AlignedSignal&) const = default;
};

/// One choice of the bracketed alignment sets at a receiver: picking one
/// element per transmitter set fixes the first interference dimension; the
/// complementary elements are forced into the second.
struct AlignmentPattern {
    int rx = 0;
    std::array<int, 3> assignment{1, 2, 3};
    std::array<int, 3> choices{};  ///< 0/1 per transmitter set, receiver's set order

    /// Both interference dimensions, three aligned signals each.
    std::array<std::array<AlignedSignal, 3>, 2> dims() const;

    AlignmentPattern complement() const;

    friend bool operator==(const AlignmentPattern&, const AlignmentPattern&) = default;
};

/// The 8 patterns for one receiver, each carrying its forced complement.
std::vector<AlignmentPattern> enumerate_patterns(std::array<int, 3> assignment, int rx);

/// Canonical 2x2 minor key; zero-ness is invariant under the determinant
/// symmetries, so rows and cols are stored sorted.
struct MinorKey {
    std::array<int, 2> rows{};
    std::array<int, 2> cols{};
    auto operator<=>(const MinorKey&) const = default;

    static MinorKey canonical(int r1, int r2, int c1, int c2);
    std::string str() const;
};

/// Minor requirements a joint pattern assignment imposes on the channel:
/// a minor must vanish when two receivers align the same message pair, and
/// must not vanish when the induced collision would hit a dedicated
/// message or merge the two interference dimensions elsewhere.
struct PatternRequirements {
    std::vector<MinorKey> zeros;
    std::vector<MinorKey> nonzeros;
    std::vector<MinorKey> contradictions;  ///< required zero and nonzero at once

    bool contradictory() const { return !contradictions.empty(); }
};

PatternRequirements pattern_requirements(const std::array<AlignmentPattern, 3>& joint);

/// Same, with each requirement additionally evaluated against a concrete
/// channel matrix.
struct EvaluatedRequirement {
    MinorKey minor;
    bool must_be_zero = false;
    bool satisfied = false;
};
std::vector<EvaluatedRequirement> pattern_requirements(
    const std::array<AlignmentPattern, 3>& joint, const ShiftMatrix& D);

/// Exhaustively counts normalized (D, p) at ring n realizing every
/// alignment congruence of the joint pattern with all messages clean.
long long pattern_realizable_count(const std::array<AlignmentPattern, 3>& joint, RingSize n);

struct SampleResult {
    std::vector<ShiftMatrix> channels;
    long long attempts = 0;
    bool exhaustive = false;  ///< true when produced by a full scan
};

/// Diagonal-normalized channels passing the scheme constraints for roles
/// (1,2,3): an exhaustive lexicographic scan at n <= 5, seeded construction
/// plus rejection above. count <= 0 requests the full scan set (scan mode
/// only). Deterministic for a fixed seed.
SampleResult sample_valid_channels(RingSize n, int count, uint64_t rng_seed = 1);

}  // namespace cyclicia

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cyclicia/ring.hpp"

namespace cyclicia {

/// Identifies the dedicated message W_{rx,tx} from transmitter tx to
/// receiver rx. Exactly one per ordered pair.
struct MessageId {
    int rx = 0;
    int tx = 0;

    auto operator<=>(const MessageId&) const = default;

    std::string str() const { return "W" + std::to_string(rx) + std::to_string(tx); }
};

/// Fixed-width bit string. The message algebra is XOR: every payload is its
/// own inverse, so the formal + and - of the schemes coincide on this layer.
class Payload {
public:
    Payload() = default;
    explicit Payload(int width_bits)
        : width_(width_bits), bytes_(static_cast<size_t>((width_bits + 7) / 8), 0) {
        if (width_bits < 1) throw std::invalid_argument("payload width must be >= 1");
    }

    static Payload random(int width_bits, std::mt19937_64& rng);

    int width() const { return width_; }
    bool zero() const;

    Payload& operator^=(const Payload& other);
    friend Payload operator^(Payload a, const Payload& b) { return a ^= b; }
    friend bool operator==(const Payload&, const Payload&) = default;

    std::string hex() const;

private:
    int width_ = 0;
    std::vector<uint8_t> bytes_;
};

struct Message {
    MessageId id;
    Payload payload;
};

/// Formal integer-coefficient sum of message identifiers. This layer is the
/// ground truth for decodability: XOR payloads cannot distinguish + from -,
/// a coefficient of 2 from 0, and so on.
class SymbolicCombo {
public:
    SymbolicCombo() = default;

    static SymbolicCombo of(MessageId id, int coeff = 1) {
        SymbolicCombo c;
        c.add_term(id, coeff);
        return c;
    }

    void add_term(MessageId id, int coeff);
    void add(const SymbolicCombo& other, int sign = 1);

    SymbolicCombo plus(const SymbolicCombo& other) const;
    SymbolicCombo minus(const SymbolicCombo& other) const;
    SymbolicCombo negated() const;

    bool empty() const { return terms_.empty(); }
    int coefficient(MessageId id) const;

    /// True iff the combo is exactly {id: +1} or {id: -1}.
    bool clean_for(MessageId id) const;

    /// The sole term when the combo has exactly one entry.
    std::optional<std::pair<MessageId, int>> sole_term() const;

    const std::map<MessageId, int>& terms() const { return terms_; }

    friend bool operator==(const SymbolicCombo&, const SymbolicCombo&) = default;

private:
    std::map<MessageId, int> terms_;
};

using SymbolicSlot = SymbolicCombo;

/// One transmitter's signal: per-dimension formal sums paired with the XOR
/// image of the same sums evaluated on message payloads.
struct TransmitSignal {
    int owner = 0;  ///< transmitter index i
    RingSize ring{1};
    int payload_width = 0;
    std::vector<SymbolicSlot> slots;
    std::vector<Payload> payloads;
};

struct ReceivedSignal {
    int owner = 0;  ///< receiver index j
    RingSize ring{1};
    int payload_width = 0;
    std::vector<SymbolicSlot> slots;
    std::vector<Payload> payloads;
};

/// How a message ended up decoded.
enum class DecodeBasis {
    CleanSlot,          ///< slot held the bare message
    AfterCancellation,  ///< clean after subtracting known messages
    BackhaulDelivery,   ///< payload arrived over a backhaul link
};

struct DecodedEntry {
    MessageId id;
    int slot = -1;  ///< -1 for backhaul deliveries
    Payload payload;
    DecodeBasis basis = DecodeBasis::CleanSlot;
};

struct SlotResidual {
    int slot = 0;
    SymbolicCombo residual;  ///< after known-message cancellation
};

struct DecodeRecord {
    int rx = 0;
    std::vector<DecodedEntry> decoded;
    std::vector<SlotResidual> residuals;  ///< non-empty slots only

    bool has(MessageId id) const;
    const DecodedEntry* find(MessageId id) const;
};

/// Exact rational, normalized (positive denominator, gcd 1).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

struct DofReport {
    int decoded = 0;     ///< M, dedicated messages decoded interference-free
    int dimensions = 1;  ///< n
    Rational dof;        ///< exactly M/n
};

/// Submessage counts m_ji, receivers x transmitters.
struct SubmessageMatrix {
    std::vector<std::vector<int>> m;

    int receivers() const { return static_cast<int>(m.size()); }
    int transmitters() const { return m.empty() ? 0 : static_cast<int>(m.front().size()); }
};

/// Builds u_i(x): slot p_ji carries exactly {W_ji: +1}; payloads sharing a
/// slot are XORed. Requires exactly one message per receiver, all owned by
/// transmitter tx.
TransmitSignal compose_transmit(const ParamVector& p, int tx,
                                std::span<const Message> messages);

/// Builds r_j(x) as the superposition of row-shifted transmit signals:
/// slot m of r_j accumulates slot (m - d_ji) of every u_i.
ReceivedSignal propagate(const ShiftMatrix& D, std::span<const TransmitSignal> transmits,
                         int rx);

/// Decoding against a set of fully resolved messages: a slot decodes W
/// when its formal sum, after the known messages are cancelled out, is
/// exactly +/-W with W dedicated to this receiver. Undecodable is a result,
/// not an error.
DecodeRecord decode(const ReceivedSignal& r, std::span<const Message> known);

DofReport dof_of(int decoded, RingSize n);

/// The submessage upper bound: total message count over the worst
/// (row sum + column sum - m_ji) among strictly positive entries.
Rational dof_upper_bound(const SubmessageMatrix& m);

}  // namespace cyclicia

#include "cyclicia/cpcm.hpp"

#include <algorithm>
#include <set>

namespace cyclicia {

Payload Payload::random(int width_bits, std::mt19937_64& rng) {
    Payload p(width_bits);
    for (auto& b : p.bytes_) {
        b = static_cast<uint8_t>(rng() & 0xff);
    }
    // mask unused high bits so equality is width-exact
    const int spare = static_cast<int>(p.bytes_.size()) * 8 - width_bits;
    if (spare > 0) {
        p.bytes_.back() &= static_cast<uint8_t>(0xff >> spare);
    }
    return p;
}

bool Payload::zero() const {
    return std::all_of(bytes_.begin(), bytes_.end(), [](uint8_t b) { return b == 0; });
}

Payload& Payload::operator^=(const Payload& other) {
    if (width_ != other.width_) {
        throw std::invalid_argument("payload widths differ: " + std::to_string(width_) +
                                    " vs " + std::to_string(other.width_));
    }
    for (size_t i = 0; i < bytes_.size(); ++i) {
        bytes_[i] ^= other.bytes_[i];
    }
    return *this;
}

std::string Payload::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (auto it = bytes_.rbegin(); it != bytes_.rend(); ++it) {
        out.push_back(digits[*it >> 4]);
        out.push_back(digits[*it & 0xf]);
    }
    return out;
}

void SymbolicCombo::add_term(MessageId id, int coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(id, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void SymbolicCombo::add(const SymbolicCombo& other, int sign) {
    for (const auto& [id, c] : other.terms_) {
        add_term(id, sign * c);
    }
}

SymbolicCombo SymbolicCombo::plus(const SymbolicCombo& other) const {
    SymbolicCombo out = *this;
    out.add(other, 1);
    return out;
}

SymbolicCombo SymbolicCombo::minus(const SymbolicCombo& other) const {
    SymbolicCombo out = *this;
    out.add(other, -1);
    return out;
}

SymbolicCombo SymbolicCombo::negated() const {
    SymbolicCombo out;
    for (const auto& [id, c] : terms_) out.terms_.emplace(id, -c);
    return out;
}

int SymbolicCombo::coefficient(MessageId id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? 0 : it->second;
}

bool SymbolicCombo::clean_for(MessageId id) const {
    if (terms_.size() != 1) return false;
    const auto& [tid, c] = *terms_.begin();
    return tid == id && (c == 1 || c == -1);
}

std::optional<std::pair<MessageId, int>> SymbolicCombo::sole_term() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
}

bool DecodeRecord::has(MessageId id) const { return find(id) != nullptr; }

const DecodedEntry* DecodeRecord::find(MessageId id) const {
    for (const auto& e : decoded) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

TransmitSignal compose_transmit(const ParamVector& p, int tx,
                                std::span<const Message> messages) {
    const int users = p.users();
    const int n = p.ring().value();
    if (tx < 1 || tx > users) {
        throw std::invalid_argument("transmitter index " + std::to_string(tx) +
                                    " outside 1.." + std::to_string(users));
    }
    if (messages.empty()) {
        throw std::invalid_argument("no messages for transmitter " + std::to_string(tx));
    }
    const int width = messages.front().payload.width();

    TransmitSignal u;
    u.owner = tx;
    u.ring = p.ring();
    u.payload_width = width;
    u.slots.resize(static_cast<size_t>(n));
    u.payloads.assign(static_cast<size_t>(n), Payload(width));

    std::set<MessageId> seen;
    for (const auto& msg : messages) {
        if (msg.id.tx != tx) {
            throw std::invalid_argument("message " + msg.id.str() +
                                        " does not belong to transmitter " + std::to_string(tx));
        }
        if (!seen.insert(msg.id).second) {
            throw std::invalid_argument("duplicate message id " + msg.id.str());
        }
        if (msg.payload.width() != width) {
            throw std::invalid_argument("payload width mismatch for " + msg.id.str());
        }
        const int slot = p.exponent(msg.id.rx, tx);
        u.slots[static_cast<size_t>(slot)].add_term(msg.id, 1);
        u.payloads[static_cast<size_t>(slot)] ^= msg.payload;
    }
    if (static_cast<int>(seen.size()) != users) {
        throw std::invalid_argument("transmitter " + std::to_string(tx) + " got " +
                                    std::to_string(seen.size()) + " messages, expected one per receiver");
    }
    return u;
}

ReceivedSignal propagate(const ShiftMatrix& D, std::span<const TransmitSignal> transmits,
                         int rx) {
    const int users = D.users();
    const int n = D.ring().value();
    if (static_cast<int>(transmits.size()) != users) {
        throw std::invalid_argument("expected " + std::to_string(users) + " transmit signals, got " +
                                    std::to_string(transmits.size()));
    }
    const int width = transmits.empty() ? 0 : transmits.front().payload_width;

    ReceivedSignal r;
    r.owner = rx;
    r.ring = D.ring();
    r.payload_width = width;
    r.slots.resize(static_cast<size_t>(n));
    r.payloads.assign(static_cast<size_t>(n), Payload(width));

    for (const auto& u : transmits) {
        if (!(u.ring == D.ring())) {
            throw RingMismatchError("transmit signal ring differs from channel ring");
        }
        if (u.payload_width != width) {
            throw std::invalid_argument("payload width differs across transmit signals");
        }
        const int shift = D.exponent(rx, u.owner);
        for (int s = 0; s < n; ++s) {
            if (u.slots[static_cast<size_t>(s)].empty()) continue;
            const int dest = (s + shift) % n;
            r.slots[static_cast<size_t>(dest)].add(u.slots[static_cast<size_t>(s)], 1);
            r.payloads[static_cast<size_t>(dest)] ^= u.payloads[static_cast<size_t>(s)];
        }
    }
    return r;
}

DecodeRecord decode(const ReceivedSignal& r, std::span<const Message> known) {
    DecodeRecord rec;
    rec.rx = r.owner;
    const int n = r.ring.value();

    for (int s = 0; s < n; ++s) {
        const auto& slot = r.slots[static_cast<size_t>(s)];
        if (slot.empty()) continue;

        SymbolicCombo residual = slot;
        Payload payload = r.payloads[static_cast<size_t>(s)];
        bool cancelled = false;
        for (const auto& km : known) {
            const int c = residual.coefficient(km.id);
            if (c == 0) continue;
            residual.add_term(km.id, -c);
            if (c % 2 != 0) payload ^= km.payload;
            cancelled = true;
        }

        if (auto term = residual.sole_term();
            term && (term->second == 1 || term->second == -1) && term->first.rx == r.owner) {
            rec.decoded.push_back({term->first, s, payload,
                                   cancelled ? DecodeBasis::AfterCancellation
                                             : DecodeBasis::CleanSlot});
        }
        if (!residual.empty()) {
            rec.residuals.push_back({s, std::move(residual)});
        }
    }
    return rec;
}

DofReport dof_of(int decoded, RingSize n) {
    if (decoded < 0) throw std::invalid_argument("decoded count must be >= 0");
    return DofReport{decoded, n.value(), Rational(decoded, n.value())};
}

Rational dof_upper_bound(const SubmessageMatrix& sm) {
    const int kr = sm.receivers();
    const int kt = sm.transmitters();
    if (kr < 1 || kt < 1) throw std::invalid_argument("empty submessage matrix");

    long long total = 0;
    for (const auto& row : sm.m) {
        if (static_cast<int>(row.size()) != kt) {
            throw std::invalid_argument("ragged submessage matrix");
        }
        for (int e : row) {
            if (e < 0) throw std::invalid_argument("negative submessage count");
            total += e;
        }
    }
    if (total == 0) throw std::invalid_argument("all-zero submessage matrix");

    // denominator: worst (row sum + column sum - m_ji) over entries m_ji > 0
    long long worst = 0;
    for (int j = 0; j < kr; ++j) {
        for (int i = 0; i < kt; ++i) {
            if (sm.m[static_cast<size_t>(j)][static_cast<size_t>(i)] <= 0) continue;
            long long row_sum = 0, col_sum = 0;
            for (int ii = 0; ii < kt; ++ii) row_sum += sm.m[static_cast<size_t>(j)][static_cast<size_t>(ii)];
            for (int jj = 0; jj < kr; ++jj) col_sum += sm.m[static_cast<size_t>(jj)][static_cast<size_t>(i)];
            worst = std::max(worst, row_sum + col_sum -
                                        sm.m[static_cast<size_t>(j)][static_cast<size_t>(i)]);
        }
    }
    return Rational(total, worst);
}

}  // namespace cyclicia

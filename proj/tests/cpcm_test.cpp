#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cyclicia/cpcm.hpp"
#include "test_scenarios.hpp"

using namespace cyclicia;
using namespace cyclicia::testing;

namespace {

std::vector<TransmitSignal> paper_transmits(std::mt19937_64& rng,
                                            std::vector<Message>* all_out = nullptr) {
    const ParamVector p = worked_params();
    auto all = random_messages(3, 8, rng);
    std::vector<TransmitSignal> txs;
    for (int i = 1; i <= 3; ++i) txs.push_back(compose_transmit(p, i, messages_of(all, i)));
    if (all_out) *all_out = std::move(all);
    return txs;
}

SymbolicCombo only(MessageId id) { return SymbolicCombo::of(id); }

}  // namespace

TEST_CASE("transmit composition matches the signal table rows") {
    std::mt19937_64 rng(1);
    auto txs = paper_transmits(rng);

    const auto& v1 = txs[0];
    CHECK(v1.slots[0] == only({1, 1}));
    CHECK(v1.slots[1].empty());
    CHECK(v1.slots[2] == only({2, 1}));
    CHECK(v1.slots[3].empty());
    CHECK(v1.slots[4] == only({3, 1}));

    const auto& v3 = txs[2];
    CHECK(v3.slots[0] == only({2, 3}));
    CHECK(v3.slots[1] == only({1, 3}));
    CHECK(v3.slots[2] == only({3, 3}));
    CHECK(v3.slots[3].empty());
    CHECK(v3.slots[4].empty());
}

TEST_CASE("single-user composition puts the one message in its slot") {
    ParamVector p(1, RingSize(5));
    std::mt19937_64 rng(2);
    const Message w11{MessageId{1, 1}, Payload::random(8, rng)};
    const auto u = compose_transmit(p, 1, std::vector<Message>{w11});
    CHECK(u.slots[0] == only({1, 1}));
    for (int s = 1; s < 5; ++s) CHECK(u.slots[static_cast<size_t>(s)].empty());
    CHECK(u.payloads[0] == w11.payload);
}

TEST_CASE("composition rejects bad message sets") {
    const ParamVector p = worked_params();
    std::mt19937_64 rng(3);
    auto msgs = messages_of(random_messages(3, 8, rng), 1);

    auto dup = msgs;
    dup[1].id = dup[0].id;
    CHECK_THROWS_AS(compose_transmit(p, 1, dup), std::invalid_argument);

    auto foreign = msgs;
    foreign[0].id.tx = 2;
    CHECK_THROWS_AS(compose_transmit(p, 1, foreign), std::invalid_argument);

    auto short_set = std::vector<Message>{msgs[0]};
    CHECK_THROWS_AS(compose_transmit(p, 1, short_set), std::invalid_argument);
}

TEST_CASE("propagation reproduces the received rows of the table") {
    std::mt19937_64 rng(4);
    auto txs = paper_transmits(rng);
    const ShiftMatrix D = worked_channel();

    const auto r1 = propagate(D, txs, 1);
    CHECK(r1.slots[0] == only({1, 1}));
    CHECK(r1.slots[1] == only({1, 2}));
    SymbolicCombo mid = only({2, 1}).plus(only({3, 2})).plus(only({2, 3}));
    CHECK(r1.slots[2] == mid);
    CHECK(r1.slots[3] == only({1, 3}));
    CHECK(r1.slots[4] == only({3, 1}).plus(only({2, 2})).plus(only({3, 3})));

    const auto r3 = propagate(D, txs, 3);
    CHECK(r3.slots[0] == only({3, 1}).plus(only({2, 3})));
    CHECK(r3.slots[1] == only({1, 1}).plus(only({2, 2})).plus(only({1, 3})));
    CHECK(r3.slots[2] == only({3, 3}));
    CHECK(r3.slots[3] == only({2, 1}).plus(only({1, 2})));
    CHECK(r3.slots[4] == only({3, 2}));
}

TEST_CASE("identity channel superposes slotwise") {
    std::mt19937_64 rng(5);
    auto txs = paper_transmits(rng);
    const ShiftMatrix identity(3, RingSize(5));
    const auto r2 = propagate(identity, txs, 2);
    for (int s = 0; s < 5; ++s) {
        SymbolicCombo expect;
        for (const auto& u : txs) expect.add(u.slots[static_cast<size_t>(s)], 1);
        CHECK(r2.slots[static_cast<size_t>(s)] == expect);
    }
}

TEST_CASE("propagation validates dimensions and rings") {
    std::mt19937_64 rng(6);
    auto txs = paper_transmits(rng);
    const ShiftMatrix D = worked_channel();
    auto two = std::vector<TransmitSignal>{txs[0], txs[1]};
    CHECK_THROWS_AS(propagate(D, two, 1), std::invalid_argument);

    const ShiftMatrix d7(3, RingSize(7));
    CHECK_THROWS_AS(propagate(d7, txs, 1), RingMismatchError);
}

TEST_CASE("decoding with and without known interference") {
    std::mt19937_64 rng(7);
    std::vector<Message> all;
    auto txs = paper_transmits(rng, &all);
    const ShiftMatrix D = worked_channel();
    auto original = [&](MessageId id) {
        for (const auto& m : all) {
            if (m.id == id) return m;
        }
        throw std::logic_error("missing message");
    };

    const auto r2 = propagate(D, txs, 2);
    const auto bare = decode(r2, {});
    CHECK(bare.has({2, 2}));
    CHECK(bare.has({2, 1}));
    CHECK_FALSE(bare.has({2, 3}));  // stuck behind W_12 on slot x^2

    const std::vector<Message> known{original({1, 2})};
    const auto helped = decode(r2, known);
    CHECK(helped.has({2, 3}));
    CHECK(helped.find({2, 3})->basis == DecodeBasis::AfterCancellation);
    CHECK(helped.find({2, 3})->payload == original({2, 3}).payload);

    const auto r3 = propagate(D, txs, 3);
    const auto rec3 = decode(r3, {});
    CHECK_FALSE(rec3.has({3, 1}));
    // residual interference is reported per slot
    const bool slot0_residual = std::any_of(
        rec3.residuals.begin(), rec3.residuals.end(), [](const SlotResidual& sr) {
            return sr.slot == 0 &&
                   sr.residual == SymbolicCombo::of({3, 1}).plus(SymbolicCombo::of({2, 3}));
        });
    CHECK(slot0_residual);

    // a clean slot decodes immediately, bit-for-bit
    const auto r1 = propagate(D, txs, 1);
    const auto rec1 = decode(r1, {});
    for (MessageId id : {MessageId{1, 1}, MessageId{1, 2}, MessageId{1, 3}}) {
        CHECK(rec1.has(id));
        CHECK(rec1.find(id)->basis == DecodeBasis::CleanSlot);
        CHECK(rec1.find(id)->payload == original(id).payload);
    }
}

TEST_CASE("payload layer is the XOR image of the symbolic layer") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const RingSize n(3 + static_cast<int>(rng() % 8));
        const ParamVector p = random_matrix(3, n, rng);
        const ShiftMatrix D = random_matrix(3, n, rng);
        auto all = random_messages(3, 16, rng);
        auto payload_of = [&](MessageId id) {
            for (const auto& m : all) {
                if (m.id == id) return m.payload;
            }
            throw std::logic_error("missing");
        };

        std::vector<TransmitSignal> txs;
        for (int i = 1; i <= 3; ++i) txs.push_back(compose_transmit(p, i, messages_of(all, i)));

        auto check_signal = [&](const std::vector<SymbolicSlot>& slots,
                                const std::vector<Payload>& payloads) {
            for (size_t s = 0; s < slots.size(); ++s) {
                Payload expect(16);
                for (const auto& [id, coeff] : slots[s].terms()) {
                    if (coeff % 2 != 0) expect ^= payload_of(id);
                }
                CHECK(payloads[s] == expect);
            }
        };
        for (const auto& u : txs) check_signal(u.slots, u.payloads);
        for (int j = 1; j <= 3; ++j) {
            const auto r = propagate(D, txs, j);
            check_signal(r.slots, r.payloads);
        }
    }
}

TEST_CASE("receiver row scaling permutes slots and keeps the decoded set") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const RingSize n(3 + static_cast<int>(rng() % 8));
        const ParamVector p = random_matrix(3, n, rng);
        const ShiftMatrix D = random_matrix(3, n, rng);
        auto all = random_messages(3, 8, rng);
        std::vector<TransmitSignal> txs;
        for (int i = 1; i <= 3; ++i) txs.push_back(compose_transmit(p, i, messages_of(all, i)));

        const int j = 1 + static_cast<int>(rng() % 3);
        const int c = static_cast<int>(rng() % static_cast<uint64_t>(n.value()));
        const ShiftMatrix scaled = D.row_scaled(j, c);

        const auto before = propagate(D, txs, j);
        const auto after = propagate(scaled, txs, j);
        for (int s = 0; s < n.value(); ++s) {
            CHECK(after.slots[static_cast<size_t>((s + c) % n.value())] ==
                  before.slots[static_cast<size_t>(s)]);
        }

        auto ids = [](const DecodeRecord& rec) {
            std::set<MessageId> out;
            for (const auto& e : rec.decoded) out.insert(e.id);
            return out;
        };
        CHECK(ids(decode(before, {})) == ids(decode(after, {})));
    }
}

TEST_CASE("global allocation shift keeps every decoded set") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        const RingSize n(3 + static_cast<int>(rng() % 8));
        const ParamVector p = random_matrix(3, n, rng);
        const ShiftMatrix D = random_matrix(3, n, rng);
        const int c = static_cast<int>(rng() % static_cast<uint64_t>(n.value()));
        auto all = random_messages(3, 8, rng);

        std::vector<TransmitSignal> base_txs, shifted_txs;
        const ParamVector shifted = p.shifted_all(c);
        for (int i = 1; i <= 3; ++i) {
            base_txs.push_back(compose_transmit(p, i, messages_of(all, i)));
            shifted_txs.push_back(compose_transmit(shifted, i, messages_of(all, i)));
        }
        auto ids = [](const DecodeRecord& rec) {
            std::set<MessageId> out;
            for (const auto& e : rec.decoded) out.insert(e.id);
            return out;
        };
        for (int j = 1; j <= 3; ++j) {
            CHECK(ids(decode(propagate(D, base_txs, j), {})) ==
                  ids(decode(propagate(D, shifted_txs, j), {})));
        }
    }
}

TEST_CASE("propagation is linear on the symbolic layer") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const RingSize n(3 + static_cast<int>(rng() % 6));
        const ShiftMatrix D = random_matrix(3, n, rng);
        const ParamVector pa = random_matrix(3, n, rng);
        const ParamVector pb = random_matrix(3, n, rng);
        auto all = random_messages(3, 8, rng);

        std::vector<TransmitSignal> ta, tb, sum;
        for (int i = 1; i <= 3; ++i) {
            ta.push_back(compose_transmit(pa, i, messages_of(all, i)));
            tb.push_back(compose_transmit(pb, i, messages_of(all, i)));
            TransmitSignal s = ta.back();
            for (int slot = 0; slot < n.value(); ++slot) {
                s.slots[static_cast<size_t>(slot)].add(tb.back().slots[static_cast<size_t>(slot)], 1);
            }
            sum.push_back(std::move(s));
        }
        for (int j = 1; j <= 3; ++j) {
            const auto ra = propagate(D, ta, j);
            const auto rb = propagate(D, tb, j);
            const auto rs = propagate(D, sum, j);
            for (int slot = 0; slot < n.value(); ++slot) {
                CHECK(rs.slots[static_cast<size_t>(slot)] ==
                      ra.slots[static_cast<size_t>(slot)].plus(rb.slots[static_cast<size_t>(slot)]));
            }
        }
    }
}

TEST_CASE("degrees of freedom are exact rationals") {
    CHECK(dof_of(9, RingSize(5)).dof == Rational(9, 5));
    CHECK(dof_of(0, RingSize(5)).dof == Rational(0, 1));
    CHECK(dof_of(4, RingSize(3)).dof == Rational(4, 3));
    CHECK(dof_of(9, RingSize(5)).dof.str() == "9/5");
    CHECK_THROWS_AS(dof_of(-1, RingSize(5)), std::invalid_argument);
    CHECK(Rational(10, 6) == Rational(5, 3));
}

TEST_CASE("submessage upper bound") {
    CHECK(dof_upper_bound({{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}}) == Rational(9, 5));
    CHECK(dof_upper_bound({{{1, 1}, {1, 1}}}) == Rational(4, 3));
    CHECK(dof_upper_bound({{{2, 1, 1}, {1, 1, 1}, {1, 1, 1}}}) == Rational(10, 6));
    CHECK_THROWS_AS(dof_upper_bound({{{0, 0}, {0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(dof_upper_bound({{{1, -1}, {1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(dof_upper_bound({{}}), std::invalid_argument);
}

TEST_CASE("payload arithmetic") {
    std::mt19937_64 rng(12);
    const Payload a = Payload::random(12, rng);
    const Payload b = Payload::random(12, rng);
    CHECK((a ^ b) == (b ^ a));
    CHECK((a ^ a).zero());
    CHECK(((a ^ b) ^ b) == a);
    CHECK_THROWS_AS(a ^ Payload::random(13, rng), std::invalid_argument);
    CHECK_THROWS_AS(Payload(0), std::invalid_argument);
}

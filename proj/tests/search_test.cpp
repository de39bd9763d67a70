#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cyclicia/cpcm.hpp"
#include "cyclicia/schemes.hpp"
#include "cyclicia/search.hpp"
#include "cyclicia/separability.hpp"
#include "test_scenarios.hpp"

using namespace cyclicia;
using namespace cyclicia::testing;

namespace {

/// No-pruning reference for one channel: enumerates every allocation with
/// p_11 = 0 and counts catalog survivors and fully clean configurations
/// straight off the condition list. Deliberately naive.
std::pair<long long, long long> unpruned_channel_reference(const ShiftMatrix& D) {
    const int n = D.ring().value();
    const auto catalog = full_catalog({1, 2, 3});
    long long survivors = 0, feasible = 0;

    ParamVector p(3, D.ring());
    std::array<std::pair<int, int>, 8> free_slots{
        {{2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {3, 3}}};
    std::array<int, 8> v{};
    while (true) {
        for (size_t s = 0; s < 8; ++s) {
            p.set(free_slots[s].first, free_slots[s].second, v[s]);
        }
        bool ok = true;
        for (const auto& cond : catalog) {
            if (evaluate_side(cond.lhs, D, p) == evaluate_side(cond.rhs, D, p)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            survivors += 1;
            if (dedicated_all_clean(D, p)) feasible += 1;
        }
        size_t pos = 0;
        while (pos < 8) {
            if (++v[pos] < n) break;
            v[pos] = 0;
            pos += 1;
        }
        if (pos == 8) break;
    }
    return {survivors, feasible};
}

ShiftMatrix normalized_channel(const std::array<int, 6>& off, RingSize n) {
    ShiftMatrix D(3, n);
    D.set(1, 2, off[0]);
    D.set(1, 3, off[1]);
    D.set(2, 1, off[2]);
    D.set(2, 3, off[3]);
    D.set(3, 1, off[4]);
    D.set(3, 2, off[5]);
    return D;
}

}  // namespace

TEST_CASE("positional cleanliness agrees with signal-level decoding") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const RingSize n(3 + static_cast<int>(rng() % 7));
        const ShiftMatrix D = random_matrix(3, n, rng);
        const ParamVector p = random_matrix(3, n, rng);

        auto all = random_messages(3, 8, rng);
        std::vector<TransmitSignal> txs;
        for (int i = 1; i <= 3; ++i) txs.push_back(compose_transmit(p, i, messages_of(all, i)));
        int via_decode = 0;
        for (int j = 1; j <= 3; ++j) {
            via_decode += static_cast<int>(decode(propagate(D, txs, j), {}).decoded.size());
        }
        CHECK(via_decode == clean_dedicated_count(D, p));
        CHECK(dedicated_all_clean(D, p) == (via_decode == 9));
    }
}

TEST_CASE("pruned search matches the worked channel's reference slice") {
    const ChannelSearchStats stats = search_channel(worked_channel());
    CHECK(stats.catalog_survivors == 3);
    CHECK(stats.feasible == 0);

    const auto [survivors, feasible] = unpruned_channel_reference(worked_channel());
    CHECK(survivors == 3);
    CHECK(feasible == 0);
}

TEST_CASE("pruned search matches the no-pruning reference on random channels") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        std::array<int, 6> off{};
        for (auto& o : off) o = static_cast<int>(rng() % 5);
        const ShiftMatrix D = normalized_channel(off, RingSize(5));
        const auto stats = search_channel(D);
        const auto [survivors, feasible] = unpruned_channel_reference(D);
        CHECK(stats.catalog_survivors == survivors);
        CHECK(stats.feasible == feasible);
    }
}

TEST_CASE("pruned and unpruned searches agree over the whole n=3 space") {
    long long survivors = 0, feasible = 0;
    for (int c = 0; c < 729; ++c) {
        std::array<int, 6> off{};
        int v = c;
        for (int d = 5; d >= 0; --d) {
            off[static_cast<size_t>(d)] = v % 3;
            v /= 3;
        }
        const ShiftMatrix D = normalized_channel(off, RingSize(3));
        const auto [s, f] = unpruned_channel_reference(D);
        survivors += s;
        feasible += f;
    }
    const InfeasibilityCertificate cert = prove_infeasibility(RingSize(3), 2);
    CHECK(cert.catalog_survivors == survivors);
    CHECK(cert.feasible == feasible);
    CHECK(cert.feasible == 0);
    CHECK(cert.catalog_survivors == 0);
}

TEST_CASE("the certificate at n=5") {
    const InfeasibilityCertificate cert = prove_infeasibility(RingSize(5), 4);
    CHECK(cert.ring == 5);
    CHECK(cert.users == 3);
    CHECK(cert.channels_enumerated == 15625);
    CHECK(cert.parameter_space == 390625);
    CHECK(cert.feasible == 0);
    CHECK(cert.infeasible());
    // the catalog alone admits survivors; none of them is fully clean
    CHECK(cert.catalog_survivors == 7000);
    CHECK(cert.nodes_visited > 0);
    CHECK_FALSE(cert.normalization.empty());
}

TEST_CASE("worker count never changes the certificate") {
    const InfeasibilityCertificate one = prove_infeasibility(RingSize(4), 1);
    const InfeasibilityCertificate eight = prove_infeasibility(RingSize(4), 8);
    CHECK(one.nodes_visited == eight.nodes_visited);
    CHECK(one.catalog_survivors == eight.catalog_survivors);
    CHECK(one.feasible == eight.feasible);
}

TEST_CASE("the exhaustive guard rejects large rings") {
    CHECK_THROWS_AS(prove_infeasibility(RingSize(8)), std::invalid_argument);
    CHECK_THROWS_AS(prove_two_user(RingSize(9)), std::invalid_argument);
}

TEST_CASE("the two-user sub-network is feasible at n=3") {
    const InfeasibilityCertificate cert = prove_two_user(RingSize(3));
    CHECK(cert.users == 2);
    CHECK(cert.feasible == 2);
    CHECK_FALSE(cert.infeasible());

    // independent recount through the signal layer
    std::mt19937_64 rng(43);
    long long feasible = 0;
    for (int delta = 0; delta < 3; ++delta) {
        ShiftMatrix D(2, RingSize(3));
        D.set(2, 1, delta);
        for (int p21 = 0; p21 < 3; ++p21) {
            for (int p12 = 0; p12 < 3; ++p12) {
                for (int p22 = 0; p22 < 3; ++p22) {
                    ParamVector p(2, RingSize(3));
                    p.set(2, 1, p21);
                    p.set(1, 2, p12);
                    p.set(2, 2, p22);
                    std::vector<Message> all;
                    for (int j = 1; j <= 2; ++j) {
                        for (int i = 1; i <= 2; ++i) {
                            all.push_back({MessageId{j, i}, Payload::random(8, rng)});
                        }
                    }
                    std::vector<TransmitSignal> txs;
                    for (int i = 1; i <= 2; ++i) {
                        txs.push_back(compose_transmit(p, i, messages_of(all, i)));
                    }
                    int clean = 0;
                    for (int j = 1; j <= 2; ++j) {
                        clean += static_cast<int>(decode(propagate(D, txs, j), {}).decoded.size());
                    }
                    if (clean == 4) feasible += 1;
                }
            }
        }
    }
    CHECK(feasible == cert.feasible);
}

TEST_CASE("normalization is sound: scaling rows and shifting allocations") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 5000; ++trial) {
        const RingSize n(5);
        const ShiftMatrix D = random_matrix(3, n, rng);
        const ParamVector p = random_matrix(3, n, rng);

        ShiftMatrix normD = D;
        for (int j = 1; j <= 3; ++j) normD = normD.row_scaled(j, -D.exponent(j, j));
        const ParamVector normP = p.shifted_all(-p.exponent(1, 1));

        CHECK(normD.exponent(1, 1) == 0);
        CHECK(normD.exponent(2, 2) == 0);
        CHECK(normD.exponent(3, 3) == 0);
        CHECK(normP.exponent(1, 1) == 0);
        CHECK(dedicated_all_clean(D, p) == dedicated_all_clean(normD, normP));
        CHECK(clean_dedicated_count(D, p) == clean_dedicated_count(normD, normP));
    }
}

TEST_CASE("eight complementary patterns per receiver") {
    for (int rx = 1; rx <= 3; ++rx) {
        const auto patterns = enumerate_patterns({1, 2, 3}, rx);
        CHECK(patterns.size() == 8);
        std::set<std::array<int, 3>> seen;
        for (const auto& pat : patterns) {
            seen.insert(pat.choices);
            CHECK(pat.complement().complement() == pat);
            // the two dimensions together cover all six interferers once
            const auto dims = pat.dims();
            std::set<std::pair<int, int>> signals;
            for (const auto& dim : dims) {
                for (const auto& s : dim) signals.insert({s.msg_rx, s.tx});
            }
            CHECK(signals.size() == 6);
            for (const auto& [mrx, tx] : signals) CHECK(mrx != rx);
        }
        CHECK(seen.size() == 8);
    }
    CHECK_THROWS_AS(enumerate_patterns({1, 2, 3}, 4), std::invalid_argument);
}

TEST_CASE("the first-row pattern aligns the three same-row interferers") {
    AlignmentPattern pat;
    pat.rx = 1;
    pat.assignment = {1, 2, 3};
    pat.choices = {0, 0, 0};
    const auto dims = pat.dims();
    // first dimension: W_21 from Tx_1, W_22 from Tx_2, W_23 from Tx_3
    CHECK(dims[0][0] == AlignedSignal{2, 1});
    CHECK(dims[0][1] == AlignedSignal{2, 2});
    CHECK(dims[0][2] == AlignedSignal{2, 3});
    // complement: the third-row interferers
    CHECK(dims[1][0] == AlignedSignal{3, 1});
    CHECK(dims[1][1] == AlignedSignal{3, 2});
    CHECK(dims[1][2] == AlignedSignal{3, 3});
}

TEST_CASE("the proof's clash: one pair aligned at two receivers while the complement forbids it") {
    // Rx_1 aligns W_31 with W_32 (third-row picks from Tx_1 and Tx_2); its
    // complementary dimension aligns W_21 with W_22, whose collision at
    // Rx_2 would hit two dedicated arrivals. If Rx_2 also aligns the first
    // pair, D_{1,2,1,2} is forced to vanish and not to vanish at once.
    AlignmentPattern rx1{1, {1, 2, 3}, {1, 1, 0}};  // dim1: W31,W32,W23
    // at Rx_2 the sets pair rows (3,1): choices pick W_31 from Tx_1, W_32 from Tx_2
    AlignmentPattern rx2{2, {1, 2, 3}, {0, 0, 0}};
    AlignmentPattern rx3{3, {1, 2, 3}, {0, 0, 0}};

    // make sure the intended pair really is aligned on both sides
    auto aligned = [](const AlignmentPattern& pat, AlignedSignal a, AlignedSignal b) {
        for (const auto& dim : pat.dims()) {
            bool ha = false, hb = false;
            for (const auto& s : dim) {
                ha |= s == a;
                hb |= s == b;
            }
            if (ha && hb) return true;
        }
        return false;
    };
    REQUIRE(aligned(rx1, {3, 1}, {3, 2}));
    REQUIRE(aligned(rx2, {3, 1}, {3, 2}));

    const auto reqs = pattern_requirements({rx1, rx2, rx3});
    const MinorKey d1212 = MinorKey::canonical(1, 2, 1, 2);
    CHECK(std::find(reqs.zeros.begin(), reqs.zeros.end(), d1212) != reqs.zeros.end());
    CHECK(std::find(reqs.nonzeros.begin(), reqs.nonzeros.end(), d1212) != reqs.nonzeros.end());
    CHECK(reqs.contradictory());
}

TEST_CASE("the symmetric pattern forces vanishing cross minors") {
    // same-row alignment at every receiver, the spatial-IA analogue
    AlignmentPattern rx1{1, {1, 2, 3}, {0, 0, 0}};
    AlignmentPattern rx2{2, {1, 2, 3}, {1, 1, 1}};  // rows at Rx_2 are (3,1): pick row 1
    AlignmentPattern rx3{3, {1, 2, 3}, {0, 0, 0}};  // rows at Rx_3 are (1,2): pick row 1

    auto aligned = [](const AlignmentPattern& pat, AlignedSignal a, AlignedSignal b) {
        for (const auto& dim : pat.dims()) {
            bool ha = false, hb = false;
            for (const auto& s : dim) {
                ha |= s == a;
                hb |= s == b;
            }
            if (ha && hb) return true;
        }
        return false;
    };
    // W_21 and W_22 aligned at both Rx_1 and Rx_3
    REQUIRE(aligned(rx1, {2, 1}, {2, 2}));
    REQUIRE(aligned(rx3, {2, 1}, {2, 2}));

    const auto reqs = pattern_requirements({rx1, rx2, rx3});
    const MinorKey d1312 = MinorKey::canonical(1, 3, 1, 2);
    CHECK(std::find(reqs.zeros.begin(), reqs.zeros.end(), d1312) != reqs.zeros.end());
}

TEST_CASE("pattern requirements evaluate against a concrete channel") {
    AlignmentPattern rx1{1, {1, 2, 3}, {0, 0, 0}};
    AlignmentPattern rx2{2, {1, 2, 3}, {0, 0, 0}};
    AlignmentPattern rx3{3, {1, 2, 3}, {0, 0, 0}};
    const auto evaluated = pattern_requirements({rx1, rx2, rx3}, worked_channel());
    CHECK_FALSE(evaluated.empty());
    for (const auto& req : evaluated) {
        const Minor m = minor_of(worked_channel(), {req.minor.rows[0], req.minor.rows[1]},
                                 {req.minor.cols[0], req.minor.cols[1]});
        CHECK(req.satisfied == (req.must_be_zero == m.is_zero()));
    }
}

TEST_CASE("joint pattern sweep: contradictions or unrealizable, never both ways") {
    int direct = 0, fallback = 0;
    for (int bits = 0; bits < 512; ++bits) {
        std::array<AlignmentPattern, 3> joint;
        for (int r = 0; r < 3; ++r) {
            joint[static_cast<size_t>(r)].rx = r + 1;
            joint[static_cast<size_t>(r)].assignment = {1, 2, 3};
            const int b = (bits >> (3 * r)) & 7;
            joint[static_cast<size_t>(r)].choices = {b & 1, (b >> 1) & 1, (b >> 2) & 1};
        }
        const auto reqs = pattern_requirements(joint);
        if (reqs.contradictory()) {
            direct += 1;
        } else {
            fallback += 1;
            CHECK(pattern_realizable_count(joint, RingSize(5)) == 0);
        }
    }
    CHECK(direct == 464);
    CHECK(fallback == 48);
}

TEST_CASE("channel scan at n=5 finds the known valid set") {
    const SampleResult sample = sample_valid_channels(RingSize(5), 0);
    CHECK(sample.exhaustive);
    CHECK(sample.channels.size() == 100);
    const bool has_worked = std::any_of(sample.channels.begin(), sample.channels.end(),
                                       [](const ShiftMatrix& D) { return D == worked_channel(); });
    CHECK(has_worked);
    for (const auto& D : sample.channels) {
        CHECK(check_constraints(D, {1, 2, 3}).all_hold());
        CHECK(D.exponent(1, 1) == 0);
        CHECK(D.exponent(2, 2) == 0);
        CHECK(D.exponent(3, 3) == 0);
    }
}

TEST_CASE("no valid channels exist on the trivial ring") {
    const SampleResult sample = sample_valid_channels(RingSize(1), 0);
    CHECK(sample.channels.empty());
}

TEST_CASE("seeded sampling above the scan bound is deterministic and valid") {
    for (int n_val : {6, 7, 8, 9, 10, 11}) {
        const SampleResult a = sample_valid_channels(RingSize(n_val), 12, 77);
        const SampleResult b = sample_valid_channels(RingSize(n_val), 12, 77);
        CHECK(a.channels.size() == 12);
        CHECK(a.channels == b.channels);
        for (const auto& D : a.channels) {
            CHECK(check_constraints(D, {1, 2, 3}).all_hold());
        }
    }
    CHECK_THROWS_AS(sample_valid_channels(RingSize(8), 0), std::invalid_argument);
}

TEST_CASE("every sampled channel carries the full scheme pipeline") {
    std::mt19937_64 rng(45);
    const SampleResult scan = sample_valid_channels(RingSize(5), 0);
    std::vector<ShiftMatrix> channels(scan.channels.begin(), scan.channels.begin() + 20);
    const auto extra = sample_valid_channels(RingSize(7), 5, 9).channels;
    channels.insert(channels.end(), extra.begin(), extra.end());

    for (const auto& D : channels) {
        const ParamVector p = solve_parameters(D, {1, 2, 3}, 0);
        CHECK(violations_are_intended_pair(check_all(D, p), {1, 2, 3}));
        const SimulationTrace none = execute(plan_none(), D, p);
        CHECK(none.decoded_count == 7);
        for (SchemeKind scheme : {SchemeKind::FeedForward, SchemeKind::ReceiverCancellation,
                                  SchemeKind::TransmitterNeutralization, SchemeKind::Combined}) {
            const SimulationTrace trace = execute(plan_for(scheme), D, p);
            CHECK(trace.decoded_count == 9);
            CHECK(trace.dof.dof == Rational(9, D.ring().value()));
            CHECK(trace.payloads_bit_exact);
        }
    }
}

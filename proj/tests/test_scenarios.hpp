#pragma once

// The worked example both the constraint list and the signal table are
// stated for: channel exponents row-wise (0,4,2)/(4,0,2)/(1,1,0) with the
// allocation vector (0,2,4,2,0,3,1,0,2) in transmitter-major order.

#include <random>
#include <vector>

#include "cyclicia/cpcm.hpp"
#include "cyclicia/ring.hpp"

namespace cyclicia::testing {

inline ShiftMatrix worked_channel() {
    return ShiftMatrix::from_exponents({{0, 4, 2}, {4, 0, 2}, {1, 1, 0}}, RingSize(5));
}

inline ParamVector worked_params() {
    return ParamVector::from_exponents({{0, 2, 1}, {2, 0, 0}, {4, 3, 2}}, RingSize(5));
}

inline std::vector<Message> random_messages(int users, int width, std::mt19937_64& rng) {
    std::vector<Message> out;
    for (int j = 1; j <= users; ++j) {
        for (int i = 1; i <= users; ++i) {
            out.push_back({MessageId{j, i}, Payload::random(width, rng)});
        }
    }
    return out;
}

inline std::vector<Message> messages_of(const std::vector<Message>& all, int tx) {
    std::vector<Message> out;
    for (const auto& m : all) {
        if (m.id.tx == tx) out.push_back(m);
    }
    return out;
}

inline OffsetMatrix random_matrix(int users, RingSize n, std::mt19937_64& rng) {
    OffsetMatrix m(users, n);
    for (int j = 1; j <= users; ++j) {
        for (int i = 1; i <= users; ++i) {
            m.set(j, i, static_cast<int>(rng() % static_cast<uint64_t>(n.value())));
        }
    }
    return m;
}

}  // namespace cyclicia::testing

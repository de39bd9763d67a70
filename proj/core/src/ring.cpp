#include "cyclicia/ring.hpp"

namespace cyclicia {

Offset offset_combine(const Offset& a, const Offset& b, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("sign must be +1 or -1");
    }
    return sign > 0 ? a + b : a - b;
}

OffsetMatrix OffsetMatrix::from_exponents(const std::vector<std::vector<int>>& rows,
                                          RingSize ring, ExponentPolicy policy) {
    const int users = static_cast<int>(rows.size());
    OffsetMatrix m(users, ring);
    for (int j = 1; j <= users; ++j) {
        const auto& row = rows[static_cast<size_t>(j - 1)];
        if (static_cast<int>(row.size()) != users) {
            throw std::invalid_argument("matrix row " + std::to_string(j) + " has " +
                                        std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(users));
        }
        for (int i = 1; i <= users; ++i) {
            const int e = row[static_cast<size_t>(i - 1)];
            if (policy == ExponentPolicy::Strict && (e < 0 || e >= ring.value())) {
                throw std::invalid_argument("exponent " + std::to_string(e) +
                                            " outside [0," + std::to_string(ring.value()) +
                                            ") at (" + std::to_string(j) + "," +
                                            std::to_string(i) + ")");
            }
            m.set(j, i, e);
        }
    }
    return m;
}

OffsetMatrix OffsetMatrix::row_scaled(int rx, int c) const {
    OffsetMatrix out = *this;
    for (int tx = 1; tx <= users_; ++tx) {
        out.set(rx, tx, exponent(rx, tx) + c);
    }
    return out;
}

OffsetMatrix OffsetMatrix::shifted_all(int c) const {
    OffsetMatrix out = *this;
    for (int rx = 1; rx <= users_; ++rx) {
        for (int tx = 1; tx <= users_; ++tx) {
            out.set(rx, tx, exponent(rx, tx) + c);
        }
    }
    return out;
}

std::vector<std::vector<int>> OffsetMatrix::exponent_rows() const {
    std::vector<std::vector<int>> rows(static_cast<size_t>(users_));
    for (int j = 1; j <= users_; ++j) {
        auto& row = rows[static_cast<size_t>(j - 1)];
        row.resize(static_cast<size_t>(users_));
        for (int i = 1; i <= users_; ++i) {
            row[static_cast<size_t>(i - 1)] = exponent(j, i);
        }
    }
    return rows;
}

Minor minor_of(const ShiftMatrix& D, std::pair<int, int> rows, std::pair<int, int> cols) {
    if (rows.first == rows.second) {
        throw std::invalid_argument("minor rows must be distinct receivers");
    }
    if (cols.first == cols.second) {
        throw std::invalid_argument("minor cols must be distinct transmitters");
    }
    const Offset pos = D.at(rows.first, cols.first) + D.at(rows.second, cols.second);
    const Offset neg = D.at(rows.first, cols.second) + D.at(rows.second, cols.first);
    return Minor{pos, neg};
}

}  // namespace cyclicia

#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclicia {

/// Thrown when offsets from rings of different size are combined.
struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Number of signalling dimensions per period. All offset arithmetic
/// reduces modulo this value.
class RingSize {
public:
    explicit RingSize(int n) : n_(n) {
        if (n < 1) {
            throw std::invalid_argument("ring size must be >= 1, got " + std::to_string(n));
        }
    }

    int value() const { return n_; }

    friend bool operator==(RingSize, RingSize) = default;

private:
    int n_;
};

/// Exponent residue k of a monomial x^k modulo x^n - 1. Always kept in
/// canonical form 0 <= k < n; construction reduces any integer, so the
/// canonicalization is idempotent by definition.
class Offset {
public:
    Offset(long long k, RingSize ring) : ring_(ring) {
        const long long n = ring.value();
        k_ = static_cast<int>(((k % n) + n) % n);
    }

    int value() const { return k_; }
    RingSize ring() const { return ring_; }

    friend bool operator==(const Offset& a, const Offset& b) {
        return a.ring_ == b.ring_ && a.k_ == b.k_;
    }

    friend Offset operator+(const Offset& a, const Offset& b) {
        require_same_ring(a, b);
        return Offset(static_cast<long long>(a.k_) + b.k_, a.ring_);
    }

    friend Offset operator-(const Offset& a, const Offset& b) {
        require_same_ring(a, b);
        return Offset(static_cast<long long>(a.k_) - b.k_, a.ring_);
    }

    /// Renders as "x^k"; x^0 renders as "1".
    std::string str() const {
        if (k_ == 0) return "1";
        return "x^" + std::to_string(k_);
    }

private:
    static void require_same_ring(const Offset& a, const Offset& b) {
        if (!(a.ring_ == b.ring_)) {
            throw RingMismatchError("offsets live in different rings (n=" +
                                    std::to_string(a.ring_.value()) + " vs n=" +
                                    std::to_string(b.ring_.value()) + ")");
        }
    }

    int k_;
    RingSize ring_;
};

/// Signed exponent combination: sign = +1 adds, sign = -1 subtracts.
Offset offset_combine(const Offset& a, const Offset& b, int sign);

/// 2x2 subdeterminant of a shift matrix, kept as the exponent pair of the
/// binomial x^pos - x^neg. Zero exactly when the exponents coincide, since
/// x^a - x^b = 0 mod x^n - 1 iff a = b mod n.
struct Minor {
    Offset pos;
    Offset neg;

    bool is_zero() const { return pos == neg; }

    std::string str() const {
        if (is_zero()) return "0";
        return pos.str() + "-" + neg.str();
    }
};

/// How raw integers entering a matrix are treated.
enum class ExponentPolicy {
    Reduce,  ///< reduce mod n (scenario ingestion)
    Strict,  ///< require 0 <= e < n already
};

/// K x K matrix of offsets indexed (receiver, transmitter), both 1-based.
/// Holds either the channel matrix D = (d_ji) or the allocation matrix
/// p = (p_ji); the receiver-first index order of the literature is kept
/// everywhere.
class OffsetMatrix {
public:
    OffsetMatrix(int users, RingSize ring)
        : users_(users), ring_(ring), exps_(static_cast<size_t>(users * users), 0) {
        if (users < 1) throw std::invalid_argument("matrix needs at least one user");
    }

    static OffsetMatrix from_exponents(const std::vector<std::vector<int>>& rows,
                                       RingSize ring,
                                       ExponentPolicy policy = ExponentPolicy::Reduce);

    int users() const { return users_; }
    RingSize ring() const { return ring_; }

    Offset at(int rx, int tx) const { return Offset(exponent(rx, tx), ring_); }

    int exponent(int rx, int tx) const { return exps_[index(rx, tx)]; }

    void set(int rx, int tx, int exponent) {
        exps_[index(rx, tx)] = Offset(exponent, ring_).value();
    }

    /// Adds c to every exponent in row rx (channel row scaling by x^c).
    OffsetMatrix row_scaled(int rx, int c) const;

    /// Adds c to every exponent (global allocation shift by x^c).
    OffsetMatrix shifted_all(int c) const;

    std::vector<std::vector<int>> exponent_rows() const;

    friend bool operator==(const OffsetMatrix&, const OffsetMatrix&) = default;

private:
    size_t index(int rx, int tx) const {
        if (rx < 1 || rx > users_ || tx < 1 || tx > users_) {
            throw std::out_of_range("matrix index (" + std::to_string(rx) + "," +
                                    std::to_string(tx) + ") outside 1.." +
                                    std::to_string(users_));
        }
        return static_cast<size_t>((rx - 1) * users_ + (tx - 1));
    }

    int users_;
    RingSize ring_;
    std::vector<int> exps_;
};

using ShiftMatrix = OffsetMatrix;  ///< channel matrix D, entries d_ji
using ParamVector = OffsetMatrix;  ///< allocation matrix p, entries p_ji

/// Minor over rows (receivers) and cols (transmitters):
///   pos = d(r1,c1) * d(r2,c2),  neg = d(r1,c2) * d(r2,c1)
/// as exponent sums. Row/column indices must be distinct.
Minor minor_of(const ShiftMatrix& D, std::pair<int, int> rows, std::pair<int, int> cols);

}  // namespace cyclicia

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclicia/ring.hpp"
#include "cyclicia/schemes.hpp"

namespace cyclicia {

/// Thrown for malformed scenario documents (exit code 2 at the CLI).
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One simulation setup. Matrices are stored row-major with named axes:
/// rows are receivers j, columns transmitters i, so element [j-1][i-1] is
/// d_ji / p_ji. Exponents are reduced mod n on load.
struct Scenario {
    int n = 5;
    int payload_width = 8;
    std::vector<std::vector<int>> channel_rx_by_tx;                 ///< D
    std::optional<std::vector<std::vector<int>>> params_rx_by_tx;   ///< p, solver fills when absent
    std::array<int, 3> assignment{1, 2, 3};
    SchemeKind scheme = SchemeKind::None;
    uint64_t payload_seed = 1;

    RingSize ring() const { return RingSize(n); }
    ShiftMatrix channel() const;
    std::optional<ParamVector> params() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& s);

}  // namespace cyclicia

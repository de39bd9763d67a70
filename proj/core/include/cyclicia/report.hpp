#pragma once

#include <cstdint>
#include <string>

#include "cyclicia/scenario.hpp"
#include "cyclicia/schemes.hpp"
#include "cyclicia/search.hpp"

namespace cyclicia {

/// Outcome of one CLI command: a human-readable report, the same content as
/// a JSON document, and the process exit code (0 ok, 1 semantic failure,
/// 2 input error — input errors surface as exceptions instead).
struct CommandResult {
    int exit_code = 0;
    std::string text;
    std::string machine;
};

/// Renders a formal sum the way the signal tables write it, e.g.
/// "W21+W32+W23" or "W23-W12"; the receiver's dedicated message (or the
/// transmitter's own message) comes first.
std::string render_combo(const SymbolicCombo& combo, int owner, bool owner_is_receiver);

/// The signal table of a trace: rows v_1..v_K and r_1..r_K, one column per
/// offset. Byte-stable for fixed input.
std::string render_signal_table(const SimulationTrace& trace);

CommandResult run_verify(const Scenario& scenario);
CommandResult run_solve(const Scenario& scenario, int seed_pki);
CommandResult run_simulate(const Scenario& scenario);
CommandResult run_prove(int n, int users, int jobs);
CommandResult run_sample(int n, int count, uint64_t seed);

std::string certificate_to_json(const InfeasibilityCertificate& cert);

}  // namespace cyclicia

#include "cyclicia/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cyclicia {

namespace {

std::vector<std::vector<int>> reduced_rows(const std::vector<std::vector<int>>& rows, int n) {
    std::vector<std::vector<int>> out = rows;
    for (auto& row : out) {
        for (auto& e : row) {
            e = ((e % n) + n) % n;
        }
    }
    return out;
}

std::vector<std::vector<int>> parse_matrix(const nlohmann::json& j, const char* key, int n) {
    if (!j.is_array()) throw ScenarioError(std::string(key) + " must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& jr : j) {
        if (!jr.is_array()) throw ScenarioError(std::string(key) + " rows must be arrays");
        std::vector<int> row;
        for (const auto& je : jr) {
            if (!je.is_number_integer()) {
                throw ScenarioError(std::string(key) + " entries must be integers");
            }
            row.push_back(je.get<int>());
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != 3) {
        throw ScenarioError(std::string(key) + " must have 3 receiver rows, got " +
                            std::to_string(rows.size()));
    }
    for (const auto& row : rows) {
        if (row.size() != 3) {
            throw ScenarioError(std::string(key) + " rows must have 3 transmitter entries");
        }
    }
    return reduced_rows(rows, n);
}

}  // namespace

ShiftMatrix Scenario::channel() const {
    return ShiftMatrix::from_exponents(channel_rx_by_tx, ring(), ExponentPolicy::Reduce);
}

std::optional<ParamVector> Scenario::params() const {
    if (!params_rx_by_tx) return std::nullopt;
    return ParamVector::from_exponents(*params_rx_by_tx, ring(), ExponentPolicy::Reduce);
}

Scenario parse_scenario(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");

    Scenario s;
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw ScenarioError("scenario needs an integer field \"n\"");
    }
    s.n = j["n"].get<int>();
    if (s.n < 1) throw ScenarioError("n must be >= 1");

    if (j.contains("payload_width")) {
        s.payload_width = j["payload_width"].get<int>();
        if (s.payload_width < 1) throw ScenarioError("payload_width must be >= 1");
    }

    if (!j.contains("channel_rx_by_tx")) {
        throw ScenarioError("scenario needs \"channel_rx_by_tx\" (rows = receivers)");
    }
    s.channel_rx_by_tx = parse_matrix(j["channel_rx_by_tx"], "channel_rx_by_tx", s.n);

    if (j.contains("params_rx_by_tx") && !j["params_rx_by_tx"].is_null()) {
        s.params_rx_by_tx = parse_matrix(j["params_rx_by_tx"], "params_rx_by_tx", s.n);
    }

    if (j.contains("assignment")) {
        const auto& ja = j["assignment"];
        if (!ja.is_array() || ja.size() != 3) {
            throw ScenarioError("assignment must be a permutation of [1,2,3]");
        }
        for (size_t idx = 0; idx < 3; ++idx) s.assignment[idx] = ja[idx].get<int>();
        std::array<bool, 4> seen{};
        for (int v : s.assignment) {
            if (v < 1 || v > 3 || seen[static_cast<size_t>(v)]) {
                throw ScenarioError("assignment must be a permutation of [1,2,3]");
            }
            seen[static_cast<size_t>(v)] = true;
        }
    }

    if (j.contains("scheme")) {
        if (!j["scheme"].is_string()) throw ScenarioError("scheme must be a string");
        const auto parsed = parse_scheme(j["scheme"].get<std::string>());
        if (!parsed) {
            throw ScenarioError("unknown scheme \"" + j["scheme"].get<std::string>() +
                                "\" (expected ff|iac|in|combined|none)");
        }
        s.scheme = *parsed;
    }

    if (j.contains("payload_seed")) {
        s.payload_seed = j["payload_seed"].get<uint64_t>();
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
    nlohmann::json j;
    j["n"] = s.n;
    j["payload_width"] = s.payload_width;
    j["channel_rx_by_tx"] = s.channel_rx_by_tx;
    if (s.params_rx_by_tx) {
        j["params_rx_by_tx"] = *s.params_rx_by_tx;
    }
    j["assignment"] = s.assignment;
    j["scheme"] = scheme_name(s.scheme);
    j["payload_seed"] = s.payload_seed;
    return j.dump(2) + "\n";
}

}  // namespace cyclicia

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pfq {

/// One named check inside a run: value vs reference at an explicit tolerance.
/// provenance is one of "identity", "quadrature", "MC±SE".
struct CheckRecord {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string provenance = "identity";
};

struct RunReport {
    std::string command;
    std::string descriptor;  // kernel / ensemble
    nlohmann::json parameters;
    std::vector<CheckRecord> records;
    double wall_seconds = 0.0;
    std::uint64_t seed = 0;

    bool all_pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }

    void add(const std::string& name, double value, double reference, double tol,
             const std::string& provenance = "identity") {
        records.push_back({name, value, reference, tol, std::abs(value - reference) <= tol, provenance});
    }

    /// deviation-style record: value must be <= tol
    void add_residual(const std::string& name, double value, double tol,
                      const std::string& provenance = "identity") {
        records.push_back({name, value, 0.0, tol, value <= tol, provenance});
    }

    void add_flag(const std::string& name, bool ok, const std::string& provenance = "identity") {
        records.push_back({name, ok ? 1.0 : 0.0, 1.0, 0.5, ok, provenance});
    }

    nlohmann::json to_json() const;
};

nlohmann::json to_json(const CheckRecord& r);

}  // namespace pfq

#include "pfq/report.hpp"

namespace pfq {

nlohmann::json to_json(const CheckRecord& r) {
    return {{"name", r.name},       {"value", r.value},           {"reference", r.reference},
            {"tolerance", r.tolerance}, {"pass", r.pass},         {"provenance", r.provenance}};
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records) recs.push_back(pfq::to_json(r));
    return {{"command", command},     {"descriptor", descriptor}, {"parameters", parameters},
            {"records", recs},        {"wall_seconds", wall_seconds},
            {"seed", seed},           {"pass", all_pass()}};
}

}  // namespace pfq

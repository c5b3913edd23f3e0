#pragma once

// Structured results for the command-line front end: which moduli space,
// which group or count, which computation route, which theorems back it.

#include "picmod/fg_abelian_group.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace picmod {

inline constexpr int kReportSchemaVersion = 1;

inline constexpr const char* kMethodPresentation = "presentation+SNF";
inline constexpr const char* kMethodClosedForm = "closed-form";
inline constexpr const char* kMethodBothAgree = "both-agree";

struct PicardReport {
    std::string subject;
    std::string method;
    std::vector<std::string> citations;
    std::map<std::string, std::string> inputs;
    // exactly one of these is set: a group-valued or an integer-valued result
    std::optional<FgAbelianGroup> group;
    std::optional<Integer> value;

    bool operator==(const PicardReport&) const = default;

    // "Z/10" or "36"
    std::string result_string() const;
};

nlohmann::json group_to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const PicardReport& r);
PicardReport report_from_json(const nlohmann::json& j);

// Multi-line human-readable block.
std::string render_report(const PicardReport& r);

} // namespace picmod

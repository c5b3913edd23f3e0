#include "picmod/report.hpp"

#include <sstream>

namespace picmod {

namespace {

nlohmann::json integer_to_json(const Integer& v) {
    // decimal string once past 64 bits, so nothing is ever truncated
    if (fits_int64(v)) return to_int64(v);
    return v.get_str();
}

Integer integer_from_json(const nlohmann::json& j, const char* what) {
    if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError(std::string(what) + ": bad integer literal '" +
                             j.get<std::string>() + "'");
        }
    }
    throw ParseError(std::string(what) + ": expected an integer");
}

} // namespace

std::string PicardReport::result_string() const {
    if (group) return group->to_string();
    if (value) return value->get_str();
    return "(none)";
}

nlohmann::json group_to_json(const FgAbelianGroup& g) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const Integer& d : g.torsion()) torsion.push_back(integer_to_json(d));
    return {{"free_rank", g.free_rank()}, {"torsion", std::move(torsion)}};
}

FgAbelianGroup group_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("free_rank") || !j.contains("torsion"))
        throw ParseError("group: expected {\"free_rank\": r, \"torsion\": [...]}");
    std::vector<Integer> torsion;
    for (const auto& t : j.at("torsion")) torsion.push_back(integer_from_json(t, "torsion"));
    return FgAbelianGroup(j.at("free_rank").get<std::size_t>(), std::move(torsion));
}

nlohmann::json report_to_json(const PicardReport& r) {
    nlohmann::json j;
    j["schema"] = kReportSchemaVersion;
    j["subject"] = r.subject;
    j["method"] = r.method;
    j["citations"] = r.citations;
    j["inputs"] = r.inputs;
    if (r.group) j["group"] = group_to_json(*r.group);
    if (r.value) j["value"] = integer_to_json(*r.value);
    return j;
}

PicardReport report_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("report: expected a JSON object");
    if (!j.contains("schema") || j.at("schema") != kReportSchemaVersion)
        throw ParseError("report: missing or unsupported schema version");
    PicardReport r;
    try {
        r.subject = j.at("subject").get<std::string>();
        r.method = j.at("method").get<std::string>();
        r.citations = j.at("citations").get<std::vector<std::string>>();
        r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    if (j.contains("group")) r.group = group_from_json(j.at("group"));
    if (j.contains("value")) r.value = integer_from_json(j.at("value"), "value");
    return r;
}

std::string render_report(const PicardReport& r) {
    std::ostringstream os;
    os << "subject:   " << r.subject << '\n';
    os << "result:    " << r.result_string() << '\n';
    os << "method:    " << r.method << '\n';
    os << "citations: ";
    for (std::size_t i = 0; i < r.citations.size(); ++i) {
        if (i) os << ", ";
        os << r.citations[i];
    }
    os << '\n';
    if (!r.inputs.empty()) {
        os << "inputs:\n";
        for (const auto& [k, v] : r.inputs) os << "  " << k << ": " << v << '\n';
    }
    return os.str();
}

} // namespace picmod

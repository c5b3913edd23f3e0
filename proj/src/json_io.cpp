#include "picmod/json_io.hpp"

namespace picmod {

nlohmann::json presentation_to_json(const FinitePresentation& p) {
    nlohmann::json relators = nlohmann::json::array();
    for (const Word& w : p.relators) relators.push_back(w.letters);
    return {{"generators", p.num_generators}, {"relators", std::move(relators)}};
}

FinitePresentation presentation_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
        throw ParseError("presentation: expected {\"generators\": n, \"relators\": [...]}");
    std::vector<Word> relators;
    try {
        for (const auto& r : j.at("relators")) relators.emplace_back(r.get<std::vector<int>>());
        return FinitePresentation(j.at("generators").get<std::size_t>(), std::move(relators));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("presentation: ") + e.what());
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

} // namespace picmod

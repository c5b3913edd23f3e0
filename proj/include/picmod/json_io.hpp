#pragma once

// JSON interop for presentations; the group and report forms live with
// PicardReport in report.hpp.

#include "picmod/presentations.hpp"

#include "json.hpp"

namespace picmod {

// {"generators": n, "relators": [[1,2,-1], ...]}
nlohmann::json presentation_to_json(const FinitePresentation& p);
FinitePresentation presentation_from_json(const nlohmann::json& j);

} // namespace picmod

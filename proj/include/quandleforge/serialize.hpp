#pragma once

// JSON forms used by the CLI. Polynomials serialize as objects mapping
// exponent (as a string) to coefficient; relation terms serialize as
// re-parseable strings.

#include "json.hpp"
#include "quandleforge/laurent.hpp"
#include "quandleforge/term.hpp"
#include "quandleforge/thompson_quandle.hpp"

namespace qf {

nlohmann::json poly_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json matrix_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json presentation_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

nlohmann::json pelem_json(const PElem& e);

}  // namespace qf

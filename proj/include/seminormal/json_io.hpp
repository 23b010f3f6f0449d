#pragma once

#include "seminormal/rep.hpp"
#include "seminormal/verify.hpp"

#include <json.hpp>

namespace seminormal {

using Json = nlohmann::ordered_json;

Json tableau_json(const StandardTableau& L);
Json g2_path_json(const G2Path& path);
Json shape_json(const ShapeLabel& label);
Json rep_json(const WeylRep& rep);
Json rep_json(const HeckeRep& rep);
Json report_json(const CheckReport& report);

} // namespace seminormal

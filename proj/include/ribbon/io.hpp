#pragma once

// Text formats: region JSON / ASCII, tiling JSON, reduction certificates.
//
// Region JSON:  {"cells": [[x, y], ...]}
// ASCII grid:   '#' cell, '.' empty, top line is the highest row.
// Tiling JSON:  {"tileset": "T5", "tiles": [{"id": "G1", "cells": [[0,0],...]}, ...],
//                "placements": [{"tile": "G1", "dx": 0, "dy": 0, "w": 1}, ...]}
// "tiles" may be omitted when "tileset" names a library set.

#include <string>
#include <string_view>

#include <json.hpp>

#include "ribbon/groebner.hpp"
#include "ribbon/tiles.hpp"

namespace ribbon {

using Json = nlohmann::json;

Json region_to_json(const Region& r);
Region region_from_json(const Json& j);

// Lower-left cell of the bounding box lands at (0, 0) on parse, so the round
// trip is exact for normalized regions and up to translation otherwise.
std::string region_to_ascii(const Region& r);
Region region_from_ascii(std::string_view text);

// Accepts either form, deciding by the first non-blank character.
Region parse_region(std::string_view text);

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json tiling_to_json(const SignedTiling& t);
SignedTiling tiling_from_json(const Json& j);

Json certificate_to_json(const ReductionCertificate& c);
ReductionCertificate certificate_from_json(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ribbon

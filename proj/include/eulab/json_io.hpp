#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "eulab/corpus.hpp"
#include "eulab/matroid.hpp"

namespace eulab {

// matroid exchange format:
// {"elements": m, "kind": "uniform"|"bases"|"graphic",
//  "rank": r?, "bases": [[ints]]?, "vertices": v?, "edges": [[int,int]]?}
Matroid matroid_from_json(const nlohmann::json& j);

Matroid load_matroid(const std::string& path);

// corpus files are arrays of matroid objects carrying an extra "name" key
std::vector<NamedMatroid> load_corpus(const std::string& path);

nlohmann::json parse_json_file(const std::string& path);

}  // namespace eulab

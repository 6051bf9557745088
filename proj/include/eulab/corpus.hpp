#pragma once

#include <string>
#include <vector>

#include "eulab/matroid.hpp"

namespace eulab {

struct NamedMatroid {
    std::string name;
    Matroid matroid;
};

// The matroids every cross-check runs over: all uniforms on at most six
// elements, two graphic matroids, and three bases-defined matroids with
// non-trivial flat lattices.
std::vector<NamedMatroid> default_corpus();

}  // namespace eulab

#pragma once

#include <map>

#include "eulab/matroid.hpp"
#include "eulab/rational.hpp"

namespace eulab {

// Worker count for the OpenMP kernels: EULAB_THREADS when set and positive,
// otherwise the OpenMP default (1 in builds without OpenMP).
int thread_count();

// Parallel kernels. Each one is an exact drop-in for its serial
// counterpart; results are identical because every reduction is an
// integer or rational sum.
std::map<Composition, Int> men_vector_parallel(const Matroid& mat);
Int mixed_eulerian_parallel(const Composition& a);
GInvariant g_invariant_parallel(const Matroid& mat);

}  // namespace eulab

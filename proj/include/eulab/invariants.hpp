#pragma once

#include <map>

#include "eulab/matroid.hpp"
#include "eulab/multipoly.hpp"
#include "eulab/rational.hpp"

namespace eulab {

// A_M(a) for every composition a of rank(M)-1 into elements(M)-1 slots.
// Loopy matroids map every composition to zero. Requires rank(M) >= 1.
std::map<Composition, Int> men_vector(const Matroid& mat);

// Compares the G-invariants of two matroids on the same ground-set size
// and of the same rank.
bool g_equivalent(const Matroid& m1, const Matroid& m2);

// Recovers the catenary data of a loopless matroid from S-divisor
// integrals against the matroid class.
CatenaryData catenary_via_integrals(const Matroid& mat);

// Recovers the catenary data of a loopless matroid from its mixed
// Eulerian vector, pairing each S-monomial expansion with men_vector.
CatenaryData g_from_men(const Matroid& mat);

// Tutte polynomial in (x, y) assembled from intersection numbers.
// Requires a loopless matroid of rank >= 1.
MultiPoly tutte_via_intersections(const Matroid& mat);

// The x = 1 slice of the intersection formula: only the trailing chain
// of nef divisors contributes. Returns a polynomial in y.
MultiPoly tutte_via_intersections_x1(const Matroid& mat);

}  // namespace eulab

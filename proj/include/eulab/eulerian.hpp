#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eulab/basis_change.hpp"
#include "eulab/matroid.hpp"
#include "eulab/multipoly.hpp"
#include "eulab/rational.hpp"

namespace eulab {

// all compositions of total into parts nonnegative entries, in lexicographic order
std::vector<Composition> compositions(int total, int parts);

// integral of S_{b_1}^{c_1}...S_{b_k}^{c_k} over the permutohedral variety
// of dimension n, in closed form; requires sum(c) = n
Int s_integral(int n, const SparseMonomial& s);

// mixed Eulerian number A(a_1,...,a_n); requires sum(a) = n
Int mixed_eulerian(const Composition& a);

// number of permutations of n letters with exactly k-1 ascents, by enumeration
Int eulerian_classical(int n, int k);

// the volume polynomial P in the L-coordinates and its S-coordinate
// counterpart Q, both homogeneous of degree n
std::pair<MultiPoly, MultiPoly> volume_polynomials(int n);

// the five evaluators of the matroidal mixed Eulerian number A_M(a);
// each is independent of the others and they are cross-checked in tests

Int matroidal_closed(const Matroid& m, const Composition& a);

struct FlatRecursionOptions {
    // pivot index (1-based) among the positive entries; default picks the
    // positive index nearest the middle, ties toward the left
    std::optional<int> pivot;
    // when true, sum only over flats satisfying the degree side conditions;
    // when false, sum over all proper nonempty subsets and rely on the
    // vanishing conventions to kill the extraneous terms
    bool z_filter = true;
};

Int matroidal_recursion_flat(const Matroid& m, const Composition& a,
                             const FlatRecursionOptions& opts = {});

Int matroidal_recursion_lex(const Matroid& m, const Composition& a);

Int matroidal_chow(const Matroid& m, const Composition& a);

Int matroidal_divisorial(const Matroid& m, const Composition& a);

}  // namespace eulab

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eulab/multipoly.hpp"
#include "eulab/rational.hpp"

namespace eulab {

using Subset = std::uint32_t;

// multiset of rank-increment sequences over all ground-set orderings
using GInvariant = std::map<std::vector<int>, Int>;

// counts of rank-graded flag chains keyed by the size-increment sequence
using CatenaryData = std::map<std::vector<int>, Int>;

// matroid on ground set {0,...,m-1} stored as a dense rank table over
// all 2^m subsets; immutable after construction
class Matroid {
public:
    static constexpr int kMaxElements = 16;

    static Matroid uniform(int rank, int elements);
    static Matroid from_bases(int elements, const std::vector<std::vector<int>>& bases);
    static Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);
    static Matroid from_rank_table(int elements, std::vector<std::uint8_t> table);

    int elements() const { return m_; }
    Subset full_set() const { return (Subset(1) << m_) - 1; }
    int rank(Subset s) const { return rank_table_[s]; }
    int rank() const { return rank_table_[full_set()]; }
    int corank(Subset s) const { return rank() - rank(s); }
    int corank() const { return m_ - rank(); }
    int nullity(Subset s) const { return popcount(s) - rank(s); }

    Subset loops() const;
    bool loopless() const { return loops() == 0; }
    Subset closure(Subset s) const;

    // ground set of the minor is restrict_to minus contract, relabeled to
    // {0,...} with the surviving elements keeping their relative order
    Matroid minor(Subset restrict_to, Subset contract) const;
    Matroid relabel(const std::vector<int>& perm) const;

    // all flats sorted by (cardinality, bitmask); contains E, contains the
    // empty set exactly when the matroid is loopless
    std::vector<Subset> flats() const;

    // all chains F_1 < ... < F_k of proper nonempty flats with |F_i| = sizes[i];
    // empty when the matroid has a loop, since then the empty set is not a flat
    std::vector<std::vector<Subset>> flags_of_flats(const std::vector<int>& sizes) const;

    MultiPoly tutte() const;          // arity 2, variables (x, y)
    MultiPoly reduced_char_poly() const;  // arity 1, variable q; zero for loopy matroids
    Int gamma(int l) const;
    Int bases_count() const;

    GInvariant g_invariant() const;
    CatenaryData catenary() const;

    // exhaustive rank-axiom check; returns an explanatory message or "" when valid
    std::string rank_axiom_violation() const;

    bool operator==(const Matroid& other) const {
        return m_ == other.m_ && rank_table_ == other.rank_table_;
    }

    static int popcount(Subset s);

private:
    Matroid(int elements, std::vector<std::uint8_t> table);

    int m_;
    std::vector<std::uint8_t> rank_table_;
};

}  // namespace eulab

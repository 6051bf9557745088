#include "eulab/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "eulab/errors.hpp"

namespace eulab {

int Matroid::popcount(Subset s) { return std::popcount(s); }

namespace {

std::string subset_string(Subset s, int m) {
    std::string out = "{";
    bool first = true;
    for (int e = 0; e < m; ++e) {
        if (s >> e & 1) {
            if (!first) out += ",";
            out += std::to_string(e);
            first = false;
        }
    }
    return out + "}";
}

Subset mask_of(const std::vector<int>& elems, int m) {
    Subset s = 0;
    for (int e : elems) {
        if (e < 0 || e >= m) throw invalid_parameters_error("element out of range");
        s |= Subset(1) << e;
    }
    return s;
}

}  // namespace

Matroid::Matroid(int elements, std::vector<std::uint8_t> table)
    : m_(elements), rank_table_(std::move(table)) {
    if (m_ > kMaxElements) throw size_limit_error("ground set bound is 16");
    if (m_ < 1) throw invalid_parameters_error("ground set must be nonempty");
    if (rank_table_.size() != (std::size_t(1) << m_))
        throw internal_consistency_error("rank table size mismatch");
}

Matroid Matroid::from_rank_table(int elements, std::vector<std::uint8_t> table) {
    if (elements > kMaxElements) throw size_limit_error("from_rank_table: ground set bound is 16");
    if (elements < 1 || table.size() != (std::size_t(1) << elements))
        throw invalid_parameters_error("from_rank_table: table size must be 2^elements");
    Matroid out(elements, std::move(table));
    std::string violation = out.rank_axiom_violation();
    if (!violation.empty()) throw invalid_matroid_error("from_rank_table: " + violation);
    return out;
}

Matroid Matroid::uniform(int rank, int elements) {
    if (elements > kMaxElements) throw size_limit_error("uniform: ground set bound is 16");
    if (elements < 1) throw invalid_parameters_error("uniform: ground set must be nonempty");
    if (rank < 0 || rank > elements)
        throw invalid_parameters_error("uniform: rank exceeds ground set size");
    std::vector<std::uint8_t> table(std::size_t(1) << elements);
    for (Subset s = 0; s < table.size(); ++s)
        table[s] = static_cast<std::uint8_t>(std::min(popcount(s), rank));
    return Matroid(elements, std::move(table));
}

Matroid Matroid::from_bases(int elements, const std::vector<std::vector<int>>& bases) {
    if (elements > kMaxElements) throw size_limit_error("from_bases: ground set bound is 16");
    if (elements < 1) throw invalid_parameters_error("from_bases: ground set must be nonempty");
    if (bases.empty()) throw invalid_matroid_error("from_bases: empty basis set");
    std::vector<Subset> masks;
    masks.reserve(bases.size());
    for (const auto& b : bases) masks.push_back(mask_of(b, elements));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    int r = popcount(masks.front());
    for (Subset b : masks)
        if (popcount(b) != r)
            throw invalid_matroid_error("from_bases: bases of different cardinalities");

    // exhaustive basis-exchange check, reporting a witness pair on failure
    for (Subset b1 : masks) {
        for (Subset b2 : masks) {
            Subset only1 = b1 & ~b2;
            for (int x = 0; x < elements; ++x) {
                if (!(only1 >> x & 1)) continue;
                bool exchanged = false;
                Subset only2 = b2 & ~b1;
                for (int y = 0; y < elements && !exchanged; ++y) {
                    if (!(only2 >> y & 1)) continue;
                    Subset candidate = (b1 & ~(Subset(1) << x)) | (Subset(1) << y);
                    exchanged = std::binary_search(masks.begin(), masks.end(), candidate);
                }
                if (!exchanged) {
                    throw invalid_matroid_error(
                        "from_bases: exchange axiom fails for B1=" + subset_string(b1, elements) +
                        ", B2=" + subset_string(b2, elements) + ", x=" + std::to_string(x));
                }
            }
        }
    }

    std::vector<std::uint8_t> table(std::size_t(1) << elements);
    for (Subset s = 0; s < table.size(); ++s) {
        int best = 0;
        for (Subset b : masks) best = std::max(best, popcount(s & b));
        table[s] = static_cast<std::uint8_t>(best);
    }
    return Matroid(elements, std::move(table));
}

Matroid Matroid::graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
    if (vertices > 8) throw size_limit_error("graphic: vertex bound is 8");
    if (edges.size() > 16) throw size_limit_error("graphic: edge bound is 16");
    if (vertices < 1 || edges.empty())
        throw invalid_parameters_error("graphic: need at least one vertex and one edge");
    for (auto [u, v] : edges)
        if (u < 0 || u >= vertices || v < 0 || v >= vertices)
            throw invalid_parameters_error("graphic: vertex index out of range");
    int m = static_cast<int>(edges.size());
    std::vector<std::uint8_t> table(std::size_t(1) << m);
    std::vector<int> parent(vertices);
    for (Subset s = 0; s < table.size(); ++s) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int r = 0;
        for (int i = 0; i < m; ++i) {
            if (!(s >> i & 1)) continue;
            int a = find(edges[i].first), b = find(edges[i].second);
            if (a != b) {
                parent[a] = b;
                ++r;
            }
        }
        table[s] = static_cast<std::uint8_t>(r);
    }
    return Matroid(m, std::move(table));
}

Subset Matroid::loops() const {
    Subset out = 0;
    for (int e = 0; e < m_; ++e)
        if (rank(Subset(1) << e) == 0) out |= Subset(1) << e;
    return out;
}

Subset Matroid::closure(Subset s) const {
    int r = rank(s);
    Subset out = s;
    for (int e = 0; e < m_; ++e)
        if (!(s >> e & 1) && rank(s | (Subset(1) << e)) == r) out |= Subset(1) << e;
    return out;
}

Matroid Matroid::minor(Subset restrict_to, Subset contract) const {
    if ((contract & ~restrict_to) != 0 || (restrict_to & ~full_set()) != 0)
        throw invalid_parameters_error("minor: need contract within restrict_to within E");
    Subset kept = restrict_to & ~contract;
    std::vector<int> elems;
    for (int e = 0; e < m_; ++e)
        if (kept >> e & 1) elems.push_back(e);
    int mm = static_cast<int>(elems.size());
    if (mm == 0) throw invalid_parameters_error("minor: empty ground set");
    int base = rank(contract);
    std::vector<std::uint8_t> table(std::size_t(1) << mm);
    for (Subset s = 0; s < table.size(); ++s) {
        Subset lifted = contract;
        for (int i = 0; i < mm; ++i)
            if (s >> i & 1) lifted |= Subset(1) << elems[i];
        table[s] = static_cast<std::uint8_t>(rank(lifted) - base);
    }
    return Matroid(mm, std::move(table));
}

Matroid Matroid::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != m_)
        throw invalid_parameters_error("relabel: permutation length mismatch");
    Subset seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= m_ || (seen >> p & 1))
            throw invalid_parameters_error("relabel: not a permutation of the ground set");
        seen |= Subset(1) << p;
    }
    std::vector<std::uint8_t> table(std::size_t(1) << m_);
    for (Subset s = 0; s < table.size(); ++s) {
        Subset t = 0;
        for (int e = 0; e < m_; ++e)
            if (s >> e & 1) t |= Subset(1) << perm[e];
        table[t] = rank_table_[s];
    }
    return Matroid(m_, std::move(table));
}

std::vector<Subset> Matroid::flats() const {
    std::vector<Subset> out;
    for (Subset s = 0; s <= full_set(); ++s) {
        if (closure(s) == s) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

std::vector<std::vector<Subset>> Matroid::flags_of_flats(const std::vector<int>& sizes) const {
    int k = static_cast<int>(sizes.size());
    if (k > 0 && (sizes.front() <= 0 || sizes.back() >= m_))
        throw invalid_parameters_error("flags_of_flats: sizes must lie strictly between 0 and m");
    for (int i = 0; i + 1 < k; ++i)
        if (sizes[i] >= sizes[i + 1])
            throw invalid_parameters_error("flags_of_flats: sizes must strictly increase");
    std::vector<std::vector<Subset>> out;
    if (!loopless()) return out;

    std::vector<std::vector<Subset>> by_size(m_ + 1);
    for (Subset f : flats())
        if (f != 0 && f != full_set()) by_size[popcount(f)].push_back(f);

    std::vector<Subset> chain;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            out.push_back(chain);
            return;
        }
        for (Subset f : by_size[sizes[pos]]) {
            if (!chain.empty() && ((f & chain.back()) != chain.back() || f == chain.back()))
                continue;
            chain.push_back(f);
            self(self, pos + 1);
            chain.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

MultiPoly Matroid::tutte() const {
    // corank-nullity sum with (x-1)^i (y-1)^j expanded exactly
    MultiPoly out(2);
    int rk = rank();
    for (Subset s = 0; s <= full_set(); ++s) {
        int i = rk - rank(s);
        int j = nullity(s);
        for (int a = 0; a <= i; ++a) {
            for (int b = 0; b <= j; ++b) {
                Int coef = binomial(i, a) * binomial(j, b);
                if ((i - a + j - b) % 2) coef = -coef;
                out.add_term({a, b}, Rat(coef));
            }
        }
    }
    return out;
}

MultiPoly Matroid::reduced_char_poly() const {
    MultiPoly out(1);
    if (!loopless()) return out;
    int rk = rank();
    // characteristic polynomial coefficients from the subset expansion
    std::vector<Int> chi(rk + 1, 0);
    for (Subset s = 0; s <= full_set(); ++s) {
        if (popcount(s) % 2)
            chi[corank(s)] -= 1;
        else
            chi[corank(s)] += 1;
    }
    // synthetic division by q - 1; the remainder must vanish
    std::vector<Int> red(rk, 0);
    Int carry = 0;
    for (int d = rk; d >= 1; --d) {
        red[d - 1] = chi[d] + carry;
        carry = red[d - 1];
    }
    if (carry + chi[0] != 0)
        throw internal_consistency_error("characteristic polynomial not divisible by q-1");
    for (int d = 0; d < rk; ++d) out.add_term({d}, Rat(red[d]));
    return out;
}

Int Matroid::gamma(int l) const {
    if (l < 0 || l > rank() - 1 || !loopless()) return 0;
    Rat c = reduced_char_poly().coeff({l});
    Int v = rat_to_int(c);
    return v < 0 ? -v : v;
}

Int Matroid::bases_count() const {
    Int out = 0;
    int rk = rank();
    for (Subset s = 0; s <= full_set(); ++s)
        if (popcount(s) == rk && rank(s) == rk) ++out;
    return out;
}

GInvariant Matroid::g_invariant() const {
    if (m_ > 9) throw size_limit_error("g_invariant: ground set too large for the m! sweep");
    GInvariant out;
    std::vector<int> perm(m_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> seq(m_);
    do {
        Subset s = 0;
        int prev = 0;
        for (int i = 0; i < m_; ++i) {
            s |= Subset(1) << perm[i];
            int r = rank(s);
            seq[i] = r - prev;
            prev = r;
        }
        out[seq] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

CatenaryData Matroid::catenary() const {
    int rk = rank();
    std::vector<std::vector<Subset>> by_rank(rk + 1);
    for (Subset f : flats()) by_rank[rank(f)].push_back(f);

    CatenaryData out;
    std::vector<Subset> chain{closure(0)};
    auto rec = [&](auto&& self) -> void {
        int r = static_cast<int>(chain.size()) - 1;
        if (r == rk) {
            std::vector<int> key{popcount(chain.front())};
            for (std::size_t i = 1; i < chain.size(); ++i)
                key.push_back(popcount(chain[i]) - popcount(chain[i - 1]));
            out[key] += 1;
            return;
        }
        for (Subset f : by_rank[r + 1]) {
            if ((f & chain.back()) != chain.back() || f == chain.back()) continue;
            chain.push_back(f);
            self(self);
            chain.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::string Matroid::rank_axiom_violation() const {
    if (rank(0) != 0) return "rank of the empty set is nonzero";
    for (Subset s = 0; s <= full_set(); ++s) {
        if (rank(s) > popcount(s)) return "rank exceeds cardinality at " + subset_string(s, m_);
        for (int e = 0; e < m_; ++e) {
            if (s >> e & 1) continue;
            Subset t = s | (Subset(1) << e);
            int d = rank(t) - rank(s);
            if (d < 0 || d > 1) return "unit-increase fails at " + subset_string(s, m_);
        }
    }
    // submodularity over all pairs (S, e, f): rk(S+e)+rk(S+f) >= rk(S+e+f)+rk(S)
    for (Subset s = 0; s <= full_set(); ++s) {
        for (int e = 0; e < m_; ++e) {
            if (s >> e & 1) continue;
            for (int f = e + 1; f < m_; ++f) {
                if (s >> f & 1) continue;
                Subset se = s | (Subset(1) << e);
                Subset sf = s | (Subset(1) << f);
                if (rank(se) + rank(sf) < rank(se | sf) + rank(s))
                    return "submodularity fails at " + subset_string(s, m_) + " with elements " +
                           std::to_string(e) + "," + std::to_string(f);
            }
        }
    }
    return "";
}

}  // namespace eulab

#include "eulab/invariants.hpp"

#include <numeric>
#include <vector>

#include "eulab/basis_change.hpp"
#include "eulab/chow.hpp"
#include "eulab/errors.hpp"
#include "eulab/eulerian.hpp"

namespace eulab {

std::map<Composition, Int> men_vector(const Matroid& mat) {
    if (mat.rank() < 1) throw invalid_parameters_error("men_vector: rank must be at least 1");
    std::vector<Composition> all = compositions(mat.rank() - 1, mat.elements() - 1);
    std::map<Composition, Int> out;
    for (const Composition& a : all) out[a] = matroidal_closed(mat, a);
    // one entry is recomputed by an independent recursion
    const Composition& probe = all[all.size() / 2];
    if (out[probe] != matroidal_recursion_flat(mat, probe))
        throw internal_consistency_error("men_vector: evaluator disagreement on a composition");
    return out;
}

bool g_equivalent(const Matroid& m1, const Matroid& m2) {
    if (m1.elements() != m2.elements() || m1.rank() != m2.rank())
        throw invalid_parameters_error("g_equivalent: matroids must share ground-set size and rank");
    return m1.g_invariant() == m2.g_invariant();
}

namespace {

// positive sequences (b_1, ..., b_r) whose partial sums stay below m
std::vector<std::vector<int>> chain_gap_sequences(int r, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r);
    auto rec = [&](auto&& self, int pos, int partial) -> void {
        if (pos == r) {
            out.push_back(cur);
            return;
        }
        int room = (m - 1) - partial - (r - pos - 1);
        for (int v = 1; v <= room; ++v) {
            cur[pos] = v;
            self(self, pos + 1, partial + v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<int> catenary_key(const std::vector<int>& b, int m) {
    std::vector<int> key;
    key.push_back(0);
    int total = 0;
    for (int v : b) {
        key.push_back(v);
        total += v;
    }
    key.push_back(m - total);
    return key;
}

}  // namespace

CatenaryData catenary_via_integrals(const Matroid& mat) {
    if (!mat.loopless())
        throw invalid_parameters_error("catenary_via_integrals: requires a loopless matroid");
    int m = mat.elements();
    int r = mat.rank() - 1;
    CatenaryData out;
    Integrator integ;
    for (const auto& b : chain_gap_sequences(r, m)) {
        std::vector<IntegrandFactor> factors;
        factors.emplace_back(mat);
        int partial = 0;
        for (int v : b) {
            partial += v;
            factors.emplace_back(divisor_S(m, m - partial));
        }
        Int val = rat_to_int(integ.integral(m, factors));
        if (val != 0) out[catenary_key(b, m)] = val;
    }
    return out;
}

CatenaryData g_from_men(const Matroid& mat) {
    if (!mat.loopless()) throw invalid_parameters_error("g_from_men: requires a loopless matroid");
    int m = mat.elements();
    int n = m - 1;
    int r = mat.rank() - 1;
    std::map<Composition, Int> men = men_vector(mat);
    CatenaryData out;
    for (const auto& b : chain_gap_sequences(r, m)) {
        SparseMonomial s;
        int partial = 0;
        for (int v : b) {
            partial += v;
            s.b.push_back(m - partial);
            s.c.push_back(1);
        }
        std::reverse(s.b.begin(), s.b.end());
        Rat acc = 0;
        MultiPoly expansion = expand_S_monomial(n, s);
        for (const auto& [exp, coeff] : expansion.terms()) acc += coeff * Rat(men.at(exp));
        Int val = rat_to_int(acc);
        if (val != 0) out[catenary_key(b, m)] = val;
    }
    return out;
}

namespace {

void require_tutte_domain(const Matroid& mat, const char* who) {
    if (!mat.loopless() || mat.rank() < 1)
        throw invalid_parameters_error(std::string(who) + ": requires a loopless matroid of rank >= 1");
}

}  // namespace

MultiPoly tutte_via_intersections(const Matroid& mat) {
    require_tutte_domain(mat, "tutte_via_intersections");
    int m = mat.elements();
    int n = m - 1;
    int rk = mat.rank();
    int r = rk - 1;

    Integrator integ;
    MultiPoly out(2);

    // S_{n+1-i} L_1^{l-1} times a descending chain of r-l nef divisors
    for (int i = 1; i <= n; ++i) {
        for (int l = 1; l <= r; ++l) {
            for (int d = 0; d <= i - 1 - r + l; ++d) {
                std::vector<int> chain;
                for (int k = 1; k <= r - l; ++k) chain.push_back(n + 1 - k - d);
                std::vector<IntegrandFactor> factors;
                factors.emplace_back(mat);
                factors.emplace_back(divisor_S(m, n + 1 - i));
                for (int p = 0; p < l - 1; ++p) factors.emplace_back(divisor_L(m, 1));
                for (int idx : chain) factors.emplace_back(divisor_L(m, idx));
                Rat val = integ.integral(m, factors);
                if (val == 0) continue;
                Rat weight = val / Rat(factorial(r - l));
                for (int t = 0; t <= l; ++t) {
                    Rat coeff = weight * Rat(binomial(l, t));
                    if ((l - t) % 2) coeff = -coeff;
                    out.add_term({t, d}, coeff);
                }
            }
        }
    }

    // the boolean part (x-1)^rk
    for (int t = 0; t <= rk; ++t) {
        Rat coeff = Rat(binomial(rk, t));
        if ((rk - t) % 2) coeff = -coeff;
        out.add_term({t, 0}, coeff);
    }

    // pure nef chains carry the y-degree filtration
    for (int d = 0; d <= n - r; ++d) {
        std::vector<IntegrandFactor> factors;
        factors.emplace_back(mat);
        for (int k = 1; k <= r; ++k) factors.emplace_back(divisor_L(m, n + 1 - k - d));
        Rat val = integ.integral(m, factors);
        if (val == 0) continue;
        out.add_term({0, d}, val / Rat(factorial(r)));
    }

    for (const auto& [exp, coeff] : out.terms()) {
        (void)exp;
        if (denominator(coeff) != 1)
            throw internal_consistency_error("tutte_via_intersections: non-integer coefficient");
    }
    return out;
}

MultiPoly tutte_via_intersections_x1(const Matroid& mat) {
    require_tutte_domain(mat, "tutte_via_intersections_x1");
    int m = mat.elements();
    int n = m - 1;
    int r = mat.rank() - 1;
    Integrator integ;
    MultiPoly out(1);
    for (int d = 0; d <= n - r; ++d) {
        std::vector<IntegrandFactor> factors;
        factors.emplace_back(mat);
        for (int k = 1; k <= r; ++k) factors.emplace_back(divisor_L(m, n + 1 - k - d));
        Rat val = integ.integral(m, factors);
        if (val == 0) continue;
        out.add_term({d}, val / Rat(factorial(r)));
    }
    return out;
}

}  // namespace eulab

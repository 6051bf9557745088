#include "eulab/eulerian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eulab/chow.hpp"
#include "eulab/errors.hpp"

namespace eulab {

std::vector<Composition> compositions(int total, int parts) {
    if (total < 0 || parts < 0) throw invalid_parameters_error("compositions: negative arguments");
    std::vector<Composition> out;
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    Composition cur(parts, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

namespace {

void validate_composition(const Composition& a, int parts, int degree, const char* who) {
    if (static_cast<int>(a.size()) != parts)
        throw invalid_parameters_error(std::string(who) + ": composition length mismatch");
    int total = 0;
    for (int v : a) {
        if (v < 0) throw invalid_parameters_error(std::string(who) + ": negative entry");
        total += v;
    }
    if (total != degree)
        throw invalid_parameters_error(std::string(who) + ": composition degree must be " +
                                       std::to_string(degree) + ", got " + std::to_string(total));
}

}  // namespace

Int s_integral(int n, const SparseMonomial& s) {
    if (n < 1) throw invalid_parameters_error("s_integral: n must be positive");
    to_exponents(n, s);  // validates shape against the arity
    int k = static_cast<int>(s.b.size());
    int degree = std::accumulate(s.c.begin(), s.c.end(), 0);
    if (degree != n)
        throw invalid_parameters_error("s_integral: monomial degree must equal n");

    // multinomial over the consecutive gaps of the b-sequence
    std::vector<int> gaps;
    gaps.push_back(s.b.front());
    for (int i = 1; i < k; ++i) gaps.push_back(s.b[i] - s.b[i - 1]);
    gaps.push_back(n + 1 - s.b.back());
    Int val = multinomial(n + 1, gaps);

    // interior factors tie each gap to the running degree of the lower part
    int csum = 0;
    for (int i = 0; i + 1 < k; ++i) {
        csum += s.c[i];
        val *= binomial(s.b[i + 1] - s.b[i] - 1, csum - s.b[i]);
    }
    // each repeated divisor splits binomially across the boundary it cuts
    csum = 0;
    for (int i = 0; i < k; ++i) {
        val *= binomial(s.c[i] - 1, s.b[i] - 1 - csum);
        csum += s.c[i];
    }
    if ((n - k) % 2) val = -val;
    return val;
}

Int mixed_eulerian(const Composition& a) {
    int n = static_cast<int>(a.size());
    if (n < 1) throw invalid_parameters_error("mixed_eulerian: empty composition");
    validate_composition(a, n, n, "mixed_eulerian");
    Rat acc = 0;
    MultiPoly expansion = expand_L_monomial(n, a);
    for (const auto& [exp, coeff] : expansion.terms())
        acc += coeff * Rat(s_integral(n, to_sparse(exp)));
    Int out = rat_to_int(acc);
    if (out < 0) throw internal_consistency_error("mixed_eulerian: negative value");
    return out;
}

Int eulerian_classical(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw invalid_parameters_error("eulerian_classical: need 1 <= k <= n");
    if (n > 9) throw size_limit_error("eulerian_classical: enumeration bound is n <= 9");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Int count = 0;
    do {
        int ascents = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (perm[i] < perm[i + 1]) ++ascents;
        if (ascents == k - 1) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::pair<MultiPoly, MultiPoly> volume_polynomials(int n) {
    if (n < 1 || n > 5) throw size_limit_error("volume_polynomials: supported for 1 <= n <= 5");
    MultiPoly p(n), q(n);
    for (const Composition& a : compositions(n, n)) {
        Int weight = multinomial(n, a);
        p.add_term(a, Rat(weight * mixed_eulerian(a)));
        SparseMonomial s = to_sparse(a);
        std::vector<int> cs(s.c);
        q.add_term(a, Rat(multinomial(n, cs) * s_integral(n, s)));
    }
    return {p, q};
}

namespace {

// flag-sum evaluation of the integral of [X_M] S_b^c, including the sign;
// sum(c) must equal rank(M)-1
Int flag_sum_integral(const Matroid& mat, const SparseMonomial& s,
                      std::map<std::pair<std::vector<std::uint8_t>, int>, Int>& gamma_cache) {
    int n = mat.elements() - 1;
    int rk = mat.rank();
    int k = static_cast<int>(s.b.size());
    if (k == 0) return mat.loopless() ? Int(1) : Int(0);

    std::vector<int> sizes(k);
    for (int i = 1; i <= k; ++i) sizes[i - 1] = n + 1 - s.b[k - i];

    auto gamma_of = [&](const Matroid& minor, int l) -> Int {
        std::vector<std::uint8_t> table(minor.full_set() + 1);
        for (Subset t = 0; t <= minor.full_set(); ++t)
            table[t] = static_cast<std::uint8_t>(minor.rank(t));
        auto key = std::make_pair(std::move(table), l);
        auto it = gamma_cache.find(key);
        if (it != gamma_cache.end()) return it->second;
        Int g = minor.gamma(l);
        gamma_cache.emplace(std::move(key), g);
        return g;
    };

    Int total = 0;
    for (const auto& flag : mat.flags_of_flats(sizes)) {
        Int term = 1;
        int csum = 0;
        for (int i = 1; i <= k && term != 0; ++i) {
            Subset lower = flag[i - 1];
            Subset upper = i < k ? flag[i] : mat.full_set();
            csum += s.c[k - i];
            int g = mat.rank(upper) - 1 - csum;
            term *= gamma_of(mat.minor(upper, lower), g);
            term *= binomial(s.c[k - i] - 1, csum - mat.rank(lower));
        }
        total += term;
    }
    if ((rk - 1 - k) % 2) total = -total;
    return total;
}

}  // namespace

Int matroidal_closed(const Matroid& mat, const Composition& a) {
    int n = mat.elements() - 1;
    validate_composition(a, n, mat.rank() - 1, "matroidal_closed");
    if (!mat.loopless()) return 0;
    std::map<std::pair<std::vector<std::uint8_t>, int>, Int> gamma_cache;
    Rat acc = 0;
    MultiPoly expansion = expand_L_monomial(n, a);
    for (const auto& [exp, coeff] : expansion.terms())
        acc += coeff * Rat(flag_sum_integral(mat, to_sparse(exp), gamma_cache));
    return rat_to_int(acc);
}

namespace {

struct FlatRecState {
    std::optional<int> pivot;
    bool z_filter = true;
    // memo keyed by the minor's rank table and the composition
    std::map<std::pair<std::vector<std::uint8_t>, Composition>, Int> memo;
    std::map<int, Matrix> bmats;

    const Matrix& bmat(int n) {
        auto it = bmats.find(n);
        if (it == bmats.end()) it = bmats.emplace(n, matrix_B(n)).first;
        return it->second;
    }
};

std::vector<std::uint8_t> table_of(const Matroid& mat) {
    std::vector<std::uint8_t> table(mat.full_set() + 1);
    for (Subset s = 0; s <= mat.full_set(); ++s) table[s] = static_cast<std::uint8_t>(mat.rank(s));
    return table;
}

int default_pivot(const Composition& a) {
    int n = static_cast<int>(a.size());
    int best = -1;
    for (int j = 1; j <= n; ++j) {
        if (a[j - 1] <= 0) continue;
        // distance to the center of 1..n, doubled to stay integral
        int dist = std::abs(2 * j - (n + 1));
        if (best == -1 || dist < std::abs(2 * best - (n + 1))) best = j;
    }
    return best;
}

Int flat_rec(const Matroid& mat, const Composition& a, FlatRecState& state) {
    if (!mat.loopless()) return 0;
    int n = mat.elements() - 1;
    int total = std::accumulate(a.begin(), a.end(), 0);
    if (total != mat.rank() - 1) return 0;
    if (total == 0) return 1;  // rank one, the empty intersection product

    auto key = std::make_pair(table_of(mat), a);
    if (auto it = state.memo.find(key); it != state.memo.end()) return it->second;

    int j = default_pivot(a);
    if (state.pivot && *state.pivot <= n && a[*state.pivot - 1] > 0) j = *state.pivot;
    Composition rest = a;
    rest[j - 1] -= 1;

    const Matrix& b = state.bmat(n);
    Rat acc = 0;
    Subset full = mat.full_set();
    for (Subset f = 1; f < full; ++f) {
        int fsize = Matroid::popcount(f);
        int threshold = n + 1 - fsize;
        if (state.z_filter) {
            if (rest[threshold - 1] != 0) continue;
            if (mat.closure(f) != f) continue;
            int low = 0;
            for (int i = 1; i <= n - fsize; ++i) low += rest[i - 1];
            if (low != mat.corank(f) - 1) continue;
        }
        Composition low_part(rest.begin(), rest.begin() + (n - fsize));
        Composition high_part(rest.begin() + (n + 2 - fsize) - 1, rest.end());
        Int upper = flat_rec(mat.minor(full, f), low_part, state);
        if (upper == 0) continue;
        Int lower = flat_rec(mat.minor(f, 0), high_part, state);
        if (lower == 0) continue;
        acc += b[j - 1][threshold - 1] * Rat(upper * lower);
    }
    Int out = rat_to_int(acc);
    state.memo.emplace(std::move(key), out);
    return out;
}

}  // namespace

Int matroidal_recursion_flat(const Matroid& mat, const Composition& a,
                             const FlatRecursionOptions& opts) {
    validate_composition(a, mat.elements() - 1, mat.rank() - 1, "matroidal_recursion_flat");
    if (opts.pivot) {
        int j = *opts.pivot;
        if (j < 1 || j > mat.elements() - 1 || a[j - 1] <= 0)
            throw invalid_parameters_error("matroidal_recursion_flat: pivot must index a positive entry");
    }
    FlatRecState state;
    state.pivot = opts.pivot;
    state.z_filter = opts.z_filter;
    return flat_rec(mat, a, state);
}

namespace {

Int lex_rec(const Matroid& mat, const Composition& a,
            std::map<std::pair<std::vector<std::uint8_t>, Composition>, Int>& memo) {
    if (!mat.loopless()) return 0;
    int n = mat.elements() - 1;
    int j = 0;
    for (int i = n; i >= 1; --i) {
        if (a[i - 1] > 0) {
            j = i;
            break;
        }
    }
    if (j <= 1) return 1;  // the monomial is a pure power of the first divisor

    auto key = std::make_pair(table_of(mat), a);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Int acc = 0;
    if (j >= 3) {
        Composition next = a;
        next[j - 3] += 1;
        next[j - 1] -= 1;
        acc -= lex_rec(mat, next, memo);
    }
    {
        Composition next = a;
        next[j - 2] += 1;
        next[j - 1] -= 1;
        acc += 2 * lex_rec(mat, next, memo);
    }
    if (a[j - 2] == 0) {
        int tail = 0;
        for (int i = j - 1; i <= n; ++i) tail += a[i - 1];
        Subset full = mat.full_set();
        for (Subset f = 1; f < full; ++f) {
            if (Matroid::popcount(f) != n - j + 2) continue;
            if (mat.closure(f) != f || mat.rank(f) != tail) continue;
            Composition head(a.begin(), a.begin() + (j - 2));
            acc -= lex_rec(mat.minor(full, f), head, memo);
        }
    }
    memo.emplace(std::move(key), acc);
    return acc;
}

}  // namespace

Int matroidal_recursion_lex(const Matroid& mat, const Composition& a) {
    validate_composition(a, mat.elements() - 1, mat.rank() - 1, "matroidal_recursion_lex");
    std::map<std::pair<std::vector<std::uint8_t>, Composition>, Int> memo;
    return lex_rec(mat, a, memo);
}

Int matroidal_chow(const Matroid& mat, const Composition& a) {
    int m = mat.elements();
    validate_composition(a, m - 1, mat.rank() - 1, "matroidal_chow");
    if (!mat.loopless()) return 0;
    std::vector<IntegrandFactor> factors;
    factors.emplace_back(mat);
    for (int i = 1; i <= m - 1; ++i)
        for (int p = 0; p < a[i - 1]; ++p) factors.emplace_back(divisor_L(m, i));
    return rat_to_int(integral(m, factors));
}

Int matroidal_divisorial(const Matroid& mat, const Composition& a) {
    validate_composition(a, mat.elements() - 1, mat.rank() - 1, "matroidal_divisorial");
    return rat_to_int(integral_pure_matroid(mat, a));
}

}  // namespace eulab

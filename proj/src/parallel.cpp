#include "eulab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "eulab/basis_change.hpp"
#include "eulab/errors.hpp"
#include "eulab/eulerian.hpp"

#if EULAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace eulab {

int thread_count() {
    if (const char* env = std::getenv("EULAB_THREADS")) {
        try {
            int parsed = std::stoi(env);
            if (parsed >= 1) return parsed;
        } catch (const std::exception&) {
        }
    }
#if EULAB_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::map<Composition, Int> men_vector_parallel(const Matroid& mat) {
    if (mat.rank() < 1) throw invalid_parameters_error("men_vector_parallel: rank must be at least 1");
    std::vector<Composition> all = compositions(mat.rank() - 1, mat.elements() - 1);
    std::vector<Int> values(all.size());
    int threads = thread_count();
#if EULAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long idx = 0; idx < static_cast<long long>(all.size()); ++idx)
        values[idx] = matroidal_closed(mat, all[idx]);
    (void)threads;
    std::map<Composition, Int> out;
    for (std::size_t idx = 0; idx < all.size(); ++idx) out[all[idx]] = values[idx];
    return out;
}

Int mixed_eulerian_parallel(const Composition& a) {
    int n = static_cast<int>(a.size());
    if (n < 1) throw invalid_parameters_error("mixed_eulerian_parallel: empty composition");
    int total = std::accumulate(a.begin(), a.end(), 0);
    if (total != n) throw invalid_parameters_error("mixed_eulerian_parallel: composition must sum to n");

    std::vector<std::pair<Exponents, Rat>> terms;
    MultiPoly expansion = expand_L_monomial(n, a);
    for (const auto& [exp, coeff] : expansion.terms()) terms.emplace_back(exp, coeff);

    int threads = thread_count();
    std::vector<Rat> partials(std::max(threads, 1), Rat(0));
#if EULAB_HAVE_OPENMP
#pragma omp parallel num_threads(threads)
    {
        int tid = omp_get_thread_num();
        Rat local = 0;
#pragma omp for schedule(dynamic)
        for (long long idx = 0; idx < static_cast<long long>(terms.size()); ++idx)
            local += terms[idx].second * Rat(s_integral(n, to_sparse(terms[idx].first)));
        partials[tid] = local;
    }
#else
    for (const auto& [exp, coeff] : terms) partials[0] += coeff * Rat(s_integral(n, to_sparse(exp)));
#endif
    Rat acc = 0;
    for (const Rat& p : partials) acc += p;
    Int out = rat_to_int(acc);
    if (out < 0) throw internal_consistency_error("mixed_eulerian_parallel: negative value");
    return out;
}

namespace {

// the idx-th permutation of {0, ..., m-1} in lexicographic order
std::vector<int> unrank_permutation(int m, long long idx) {
    std::vector<int> pool(m);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<long long> fact(m + 1, 1);
    for (int i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
    std::vector<int> perm;
    perm.reserve(m);
    for (int pos = m - 1; pos >= 0; --pos) {
        long long digit = idx / fact[pos];
        idx %= fact[pos];
        perm.push_back(pool[static_cast<int>(digit)]);
        pool.erase(pool.begin() + static_cast<int>(digit));
    }
    return perm;
}

GInvariant g_invariant_block(const Matroid& mat, long long first, long long last) {
    int m = mat.elements();
    std::vector<int> perm = unrank_permutation(m, first);
    GInvariant local;
    for (long long idx = first; idx < last; ++idx) {
        std::vector<int> key(m);
        Subset prefix = 0;
        int prev = 0;
        for (int pos = 0; pos < m; ++pos) {
            prefix |= Subset{1} << perm[pos];
            int cur = mat.rank(prefix);
            key[pos] = cur - prev;
            prev = cur;
        }
        local[key] += 1;
        std::next_permutation(perm.begin(), perm.end());
    }
    return local;
}

}  // namespace

GInvariant g_invariant_parallel(const Matroid& mat) {
    int m = mat.elements();
    if (m > 9) throw size_limit_error("g_invariant_parallel: enumeration bound is 9 elements");
    long long total = 1;
    for (int i = 2; i <= m; ++i) total *= i;

    int threads = static_cast<int>(std::min<long long>(thread_count(), total));
    if (threads < 1) threads = 1;
    std::vector<GInvariant> blocks(threads);
#if EULAB_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
    for (int tid = 0; tid < threads; ++tid) {
        long long first = total * tid / threads;
        long long last = total * (tid + 1) / threads;
        blocks[tid] = g_invariant_block(mat, first, last);
    }
    GInvariant out;
    for (const GInvariant& block : blocks)
        for (const auto& [key, count] : block) out[key] += count;
    return out;
}

}  // namespace eulab

// Acceptance gate: one pass/fail line per criterion, exact equality throughout.
// Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eulab/basis_change.hpp"
#include "eulab/chow.hpp"
#include "eulab/corpus.hpp"
#include "eulab/eulerian.hpp"
#include "eulab/invariants.hpp"
#include "eulab/matroid.hpp"
#include "eulab/rational.hpp"

using namespace eulab;

namespace {

std::string comp_str(const Composition& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    return out + ")";
}

std::vector<NamedMatroid> corpus_at_most(int max_elements) {
    std::vector<NamedMatroid> out;
    for (auto& entry : default_corpus())
        if (entry.matroid.elements() <= max_elements) out.push_back(std::move(entry));
    return out;
}

bool criterion_eulerian_reproduction(std::string& witness) {
    if (mixed_eulerian({0, 3, 0}) != 4 || mixed_eulerian({0, 4, 0, 0}) != 11) {
        witness = "anchor value mismatch";
        return false;
    }
    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            Composition a(n, 0);
            a[k - 1] = n;
            Int lhs = mixed_eulerian(a);
            Int rhs = eulerian_classical(n, k);
            if (lhs != rhs) {
                witness = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                          to_string(lhs) + " vs " + to_string(rhs);
                return false;
            }
        }
    }
    return true;
}

bool criterion_factorial_identity(std::string& witness) {
    for (int n = 1; n <= 7; ++n) {
        Composition ones(n, 1);
        Int lhs = mixed_eulerian(ones);
        if (lhs != factorial(n)) {
            witness = "n=" + std::to_string(n) + ": " + to_string(lhs);
            return false;
        }
    }
    return true;
}

bool criterion_five_way_agreement(std::string& witness) {
    for (const auto& [name, mat] : corpus_at_most(6)) {
        if (mat.rank() < 1) continue;
        for (const Composition& a : compositions(mat.rank() - 1, mat.elements() - 1)) {
            Int closed = matroidal_closed(mat, a);
            std::pair<const char*, Int> others[] = {
                {"recursion-flat", matroidal_recursion_flat(mat, a)},
                {"recursion-lex", matroidal_recursion_lex(mat, a)},
                {"chow", matroidal_chow(mat, a)},
                {"divisorial", matroidal_divisorial(mat, a)},
            };
            for (const auto& [algo, value] : others) {
                if (value != closed) {
                    witness = name + " a=" + comp_str(a) + ": closed=" + to_string(closed) +
                              " " + algo + "=" + to_string(value);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_gamma_identification(std::string& witness) {
    for (const auto& [name, mat] : corpus_at_most(6)) {
        if (!mat.loopless() || mat.rank() < 1) continue;
        for (int l = 0; l <= mat.rank() - 1; ++l) {
            Composition a(mat.elements() - 1, 0);
            if (!a.empty()) {
                a.front() += l;
                a.back() += mat.rank() - 1 - l;
            }
            Int lhs = matroidal_closed(mat, a);
            Int rhs = mat.gamma(l);
            if (lhs != rhs) {
                witness = name + " l=" + std::to_string(l) + ": " + to_string(lhs) + " vs " +
                          to_string(rhs);
                return false;
            }
        }
    }
    return true;
}

bool criterion_basis_change_volumes(std::string& witness) {
    for (int n = 1; n <= 5; ++n) {
        auto [p, q] = volume_polynomials(n);
        if (!(apply_basis_change(n, q) == p)) {
            witness = "n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_matrix_inverse(std::string& witness) {
    for (int n = 1; n <= 12; ++n) {
        Matrix a = matrix_A(n);
        Matrix b = matrix_B(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Rat dot = 0;
                for (int k = 0; k < n; ++k) dot += b[i][k] * a[k][j];
                if (dot != Rat(i == j ? 1 : 0)) {
                    witness = "n=" + std::to_string(n) + " entry (" + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_tutte_equality(std::string& witness) {
    for (const auto& [name, mat] : corpus_at_most(6)) {
        if (!mat.loopless() || mat.rank() < 1) continue;
        if (!(tutte_via_intersections(mat) == mat.tutte())) {
            witness = name;
            return false;
        }
    }
    return true;
}

bool criterion_catenary_equality(std::string& witness) {
    for (const auto& [name, mat] : corpus_at_most(6)) {
        if (!mat.loopless()) continue;
        CatenaryData direct = mat.catenary();
        if (catenary_via_integrals(mat) != direct) {
            witness = name + " via S-divisor integrals";
            return false;
        }
        if (g_from_men(mat) != direct) {
            witness = name + " via the men expansion";
            return false;
        }
    }
    return true;
}

bool criterion_g_men_biconditional(std::string& witness) {
    std::vector<NamedMatroid> loopless;
    for (auto& entry : corpus_at_most(6))
        if (entry.matroid.loopless() && entry.matroid.rank() >= 1)
            loopless.push_back(std::move(entry));

    std::map<std::string, std::map<Composition, Int>> men;
    for (const auto& [name, mat] : loopless) men[name] = men_vector(mat);

    for (std::size_t i = 0; i < loopless.size(); ++i) {
        for (std::size_t j = i + 1; j < loopless.size(); ++j) {
            const Matroid& m1 = loopless[i].matroid;
            const Matroid& m2 = loopless[j].matroid;
            if (m1.elements() != m2.elements() || m1.rank() != m2.rank()) continue;
            bool g_eq = g_equivalent(m1, m2);
            bool men_eq = men[loopless[i].name] == men[loopless[j].name];
            if (g_eq != men_eq) {
                witness = loopless[i].name + " vs " + loopless[j].name + ": g_equal=" +
                          (g_eq ? "true" : "false") + " men_equal=" + (men_eq ? "true" : "false");
                return false;
            }
        }
    }

    std::mt19937 rng(9);
    for (const auto& [name, mat] : loopless) {
        std::vector<int> perm(mat.elements());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Matroid rel = mat.relabel(perm);
        if (!g_equivalent(mat, rel) || men[name] != men_vector(rel)) {
            witness = name + " relabeled";
            return false;
        }
    }
    return true;
}

bool criterion_structural(std::string& witness) {
    for (const auto& [name, mat] : corpus_at_most(5)) {
        if (mat.rank() < 1) continue;
        for (const Composition& a : compositions(mat.rank() - 1, mat.elements() - 1)) {
            if (matroidal_closed(mat, a) < 0) {
                witness = "negative value at " + name + " a=" + comp_str(a);
                return false;
            }
        }
    }

    std::vector<NamedMatroid> pool;
    for (auto& entry : corpus_at_most(5))
        if (entry.matroid.loopless() && entry.matroid.rank() >= 1)
            pool.push_back(std::move(entry));

    std::mt19937 rng(20260814u);
    for (int iter = 0; iter < 200; ++iter) {
        const NamedMatroid& entry = pool[rng() % pool.size()];
        const Matroid& mat = entry.matroid;
        int m = mat.elements();
        auto comps = compositions(mat.rank() - 1, m - 1);
        const Composition& a = comps[rng() % comps.size()];
        std::string tag = entry.name + " a=" + comp_str(a) + " iter=" + std::to_string(iter);

        Int base = matroidal_closed(mat, a);
        for (int j = 1; j <= static_cast<int>(a.size()); ++j) {
            if (a[j - 1] == 0) continue;
            if (matroidal_recursion_flat(mat, a, {.pivot = j}) != base) {
                witness = "pivot " + std::to_string(j) + " disagrees at " + tag;
                return false;
            }
        }
        if (matroidal_recursion_flat(mat, a, {.z_filter = false}) != base) {
            witness = "unfiltered flat recursion disagrees at " + tag;
            return false;
        }

        std::vector<IntegrandFactor> factors{mat};
        for (int i = 1; i <= m - 1; ++i)
            for (int p = 0; p < a[i - 1]; ++p) factors.emplace_back(divisor_L(m, i));
        if (integral(m, factors) != Rat(base)) {
            witness = "chow integral disagrees at " + tag;
            return false;
        }

        if (factors.size() > 1 && m >= 2) {
            int x = static_cast<int>(rng() % m);
            int y = static_cast<int>(rng() % m);
            if (x == y) y = (y + 1) % m;
            Rat lambda(1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 4));
            if (rng() % 2) lambda = -lambda;
            Divisor shifted = std::get<Divisor>(factors[1]);
            Subset full = (Subset(1) << m) - 1;
            for (Subset s = 1; s < full; ++s) {
                if (s >> x & 1) shifted.add(s, lambda);
                if (s >> y & 1) shifted.add(s, -lambda);
            }
            std::vector<IntegrandFactor> perturbed = factors;
            perturbed[1] = shifted;
            if (integral(m, perturbed) != Rat(base)) {
                witness = "principal relation shift changes the integral at " + tag;
                return false;
            }
        }

        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        if (matroidal_chow(mat.relabel(perm), a) != base) {
            witness = "relabeling changes the integral at " + tag;
            return false;
        }
    }
    return true;
}

struct Criterion {
    const char* description;
    bool (*body)(std::string&);
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"classical Eulerian reproduction for n <= 7", criterion_eulerian_reproduction},
        {"factorial identity A(1,...,1) = n! for n <= 7", criterion_factorial_identity},
        {"five-way evaluator agreement over the corpus", criterion_five_way_agreement},
        {"gamma identification on loopless corpus matroids", criterion_gamma_identification},
        {"basis change carries Q_n to P_n for n <= 5", criterion_basis_change_volumes},
        {"matrix_B(n) * matrix_A(n) = I for n <= 12", criterion_matrix_inverse},
        {"Tutte polynomials via intersection numbers", criterion_tutte_equality},
        {"catenary data via integrals and via the men vector", criterion_catenary_equality},
        {"g-invariant/men-vector biconditional with relabelings", criterion_g_men_biconditional},
        {"structural properties on 200 randomized instances", criterion_structural},
    };

    int failures = 0;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        std::string witness;
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = criteria[i].body(witness);
        } catch (const std::exception& e) {
            witness = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("[%s] criterion %zu: %s (%lld ms)\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].description, static_cast<long long>(ms));
        if (!pass) {
            std::printf("       witness: %s\n", witness.c_str());
            ++failures;
        }
    }
    return failures;
}

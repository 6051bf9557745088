#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "eulab/errors.hpp"
#include "eulab/eulerian.hpp"
#include "eulab/matroid.hpp"

using namespace eulab;

namespace {

Matroid parallel_rank2() {
    return Matroid::from_bases(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

std::vector<Int> all_five(const Matroid& m, const Composition& a) {
    return {matroidal_closed(m, a), matroidal_recursion_flat(m, a),
            matroidal_recursion_lex(m, a), matroidal_chow(m, a), matroidal_divisorial(m, a)};
}

}  // namespace

TEST_CASE("compositions enumerate in ascending lexicographic order") {
    auto c22 = compositions(2, 2);
    CHECK(c22 == std::vector<Composition>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(compositions(3, 3).size() == 10);
    CHECK(compositions(0, 3) == std::vector<Composition>{{0, 0, 0}});
    CHECK(compositions(0, 0) == std::vector<Composition>{{}});
    CHECK(compositions(2, 0).empty());
    CHECK(compositions(5, 1) == std::vector<Composition>{{5}});
    CHECK_THROWS_AS(compositions(-1, 2), invalid_parameters_error);
}

TEST_CASE("closed S integrals hit the pinned values") {
    CHECK(s_integral(1, SparseMonomial{{1}, {1}}) == 2);
    CHECK(s_integral(2, SparseMonomial{{1, 2}, {1, 1}}) == 6);
    CHECK(s_integral(2, SparseMonomial{{1}, {2}}) == -3);
    CHECK(s_integral(2, SparseMonomial{{2}, {2}}) == -3);
    CHECK(s_integral(3, SparseMonomial{{2}, {3}}) == 12);
    CHECK(s_integral(3, SparseMonomial{{1, 3}, {1, 2}}) == -12);

    CHECK_THROWS_AS(s_integral(2, SparseMonomial{{1}, {1}}), invalid_parameters_error);
    CHECK_THROWS_AS(s_integral(0, SparseMonomial{{}, {}}), invalid_parameters_error);
}

TEST_CASE("mixed Eulerian numbers specialize to the classical ones") {
    CHECK(mixed_eulerian({2, 0}) == 1);
    CHECK(mixed_eulerian({1, 1}) == 2);
    CHECK(mixed_eulerian({0, 2}) == 1);
    CHECK(mixed_eulerian({0, 3, 0}) == 4);
    CHECK(mixed_eulerian({1, 1, 1}) == 6);

    CHECK(eulerian_classical(3, 2) == 4);
    CHECK(eulerian_classical(4, 2) == 11);
    CHECK(eulerian_classical(5, 3) == 66);
    for (int n = 1; n <= 6; ++n) {
        CHECK(eulerian_classical(n, 1) == 1);
        CHECK(eulerian_classical(n, n) == 1);
    }
    CHECK_THROWS_AS(eulerian_classical(10, 2), size_limit_error);
    CHECK_THROWS_AS(eulerian_classical(3, 0), invalid_parameters_error);
    CHECK_THROWS_AS(eulerian_classical(3, 4), invalid_parameters_error);

    // n in slot k recovers the classical number for one larger case
    for (int k = 1; k <= 4; ++k) {
        Composition a(4, 0);
        a[k - 1] = 4;
        CHECK(mixed_eulerian(a) == eulerian_classical(4, k));
    }

    CHECK_THROWS_AS(mixed_eulerian({1, 0}), invalid_parameters_error);
    CHECK_THROWS_AS(mixed_eulerian({}), invalid_parameters_error);
}

TEST_CASE("volume polynomials pair up through the basis change") {
    auto [p1, q1] = volume_polynomials(1);
    CHECK(p1 == MultiPoly::monomial(1, {1}, Rat(1)));
    CHECK(q1 == MultiPoly::monomial(1, {1}, Rat(2)));

    auto [p2, q2] = volume_polynomials(2);
    CHECK(p2.coeff({2, 0}) == Rat(1));
    CHECK(p2.coeff({1, 1}) == Rat(4));
    CHECK(p2.coeff({0, 2}) == Rat(1));
    CHECK(q2.coeff({2, 0}) == Rat(-3));
    CHECK(q2.coeff({1, 1}) == Rat(12));
    CHECK(q2.coeff({0, 2}) == Rat(-3));

    for (int n = 1; n <= 3; ++n) {
        auto [p, q] = volume_polynomials(n);
        CHECK(apply_basis_change(n, q) == p);
        std::vector<Rat> corner(n, Rat(0));
        corner[0] = 1;
        CHECK(p.evaluate(corner) == Rat(1));
    }
    CHECK_THROWS_AS(volume_polynomials(0), size_limit_error);
    CHECK_THROWS_AS(volume_polynomials(6), size_limit_error);
}

TEST_CASE("the five evaluators agree on the pinned small cases") {
    Matroid u23 = Matroid::uniform(2, 3);
    for (Int v : all_five(u23, {1, 0})) CHECK(v == 1);
    for (Int v : all_five(u23, {0, 1})) CHECK(v == 2);

    Matroid u33 = Matroid::uniform(3, 3);
    for (Int v : all_five(u33, {2, 0})) CHECK(v == 1);
    for (Int v : all_five(u33, {1, 1})) CHECK(v == 2);
    for (Int v : all_five(u33, {0, 2})) CHECK(v == 1);

    // full-rank uniform matroids recover the mixed Eulerian numbers
    for (int n = 1; n <= 4; ++n) {
        Matroid u = Matroid::uniform(n + 1, n + 1);
        for (const Composition& a : compositions(n, n))
            CHECK(matroidal_closed(u, a) == mixed_eulerian(a));
    }

    Matroid u24 = Matroid::uniform(2, 4);
    for (const Composition& a : compositions(1, 3)) {
        Int expect = matroidal_closed(u24, a);
        for (Int v : all_five(u24, a)) CHECK(v == expect);
    }
    for (const Composition& a : compositions(1, 3)) {
        Int expect = matroidal_closed(parallel_rank2(), a);
        for (Int v : all_five(parallel_rank2(), a)) CHECK(v == expect);
    }

    // rank-one matroids take the empty-product value on loopless ground sets
    Matroid u13 = Matroid::uniform(1, 3);
    for (Int v : all_five(u13, {0, 0})) CHECK(v == 1);
}

TEST_CASE("loopy matroids integrate to zero under every evaluator") {
    Matroid loopy = Matroid::from_bases(3, {{0, 1}});
    for (Int v : all_five(loopy, {1, 0})) CHECK(v == 0);
    for (Int v : all_five(loopy, {0, 1})) CHECK(v == 0);
}

TEST_CASE("evaluators reject degree mismatches") {
    Matroid u24 = Matroid::uniform(2, 4);
    CHECK_THROWS_AS(matroidal_closed(u24, {1, 1, 0}), invalid_parameters_error);
    CHECK_THROWS_AS(matroidal_recursion_flat(u24, {1, 1, 0}), invalid_parameters_error);
    CHECK_THROWS_AS(matroidal_recursion_lex(u24, {1, 1, 0}), invalid_parameters_error);
    CHECK_THROWS_AS(matroidal_chow(u24, {1, 1, 0}), invalid_parameters_error);
    CHECK_THROWS_AS(matroidal_divisorial(u24, {1, 1, 0}), invalid_parameters_error);
    CHECK_THROWS_AS(matroidal_closed(u24, {1, 0}), invalid_parameters_error);
    CHECK_THROWS_AS(matroidal_closed(u24, {-1, 1, 1}), invalid_parameters_error);
}

TEST_CASE("flat recursion accepts any admissible pivot") {
    Matroid k4 = Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Composition a{1, 0, 1, 0, 0};
    Int expect = matroidal_recursion_flat(k4, a);
    CHECK(expect == matroidal_closed(k4, a));
    for (int j = 1; j <= 5; ++j) {
        if (a[j - 1] == 0) {
            CHECK_THROWS_AS(matroidal_recursion_flat(k4, a, {.pivot = j}),
                            invalid_parameters_error);
        } else {
            CHECK(matroidal_recursion_flat(k4, a, {.pivot = j}) == expect);
        }
    }
    CHECK_THROWS_AS(matroidal_recursion_flat(k4, a, {.pivot = 6}), invalid_parameters_error);
    CHECK_THROWS_AS(matroidal_recursion_flat(k4, a, {.pivot = 0}), invalid_parameters_error);

    // the side conditions on the flat sum are redundant with the vanishing rules
    for (const Composition& c : compositions(2, 5))
        CHECK(matroidal_recursion_flat(k4, c, {.z_filter = false}) ==
              matroidal_recursion_flat(k4, c));
}

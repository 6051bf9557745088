#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "eulab/errors.hpp"
#include "eulab/eulerian.hpp"
#include "eulab/invariants.hpp"
#include "eulab/matroid.hpp"
#include "eulab/parallel.hpp"

using namespace eulab;

TEST_CASE("thread count honors the environment override") {
    setenv("EULAB_THREADS", "3", 1);
    CHECK(thread_count() == 3);
    setenv("EULAB_THREADS", "0", 1);
    CHECK(thread_count() >= 1);
    setenv("EULAB_THREADS", "junk", 1);
    CHECK(thread_count() >= 1);
    unsetenv("EULAB_THREADS");
    CHECK(thread_count() >= 1);
}

TEST_CASE("parallel men vectors equal the serial ones") {
    Matroid k4 = Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(men_vector_parallel(k4) == men_vector(k4));

    Matroid u35 = Matroid::uniform(3, 5);
    CHECK(men_vector_parallel(u35) == men_vector(u35));

    Matroid loopy = Matroid::from_bases(3, {{0, 1}});
    CHECK(men_vector_parallel(loopy) == men_vector(loopy));

    // forced single-thread path
    setenv("EULAB_THREADS", "1", 1);
    CHECK(men_vector_parallel(u35) == men_vector(u35));
    unsetenv("EULAB_THREADS");
}

TEST_CASE("parallel mixed Eulerian numbers equal the serial ones") {
    for (const Composition& a : compositions(4, 4))
        CHECK(mixed_eulerian_parallel(a) == mixed_eulerian(a));
    CHECK(mixed_eulerian_parallel({1, 1, 1, 1, 1}) == 120);
    CHECK_THROWS_AS(mixed_eulerian_parallel({1, 0}), invalid_parameters_error);
}

TEST_CASE("parallel g invariants equal the serial ones") {
    Matroid pr = Matroid::from_bases(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(g_invariant_parallel(pr) == pr.g_invariant());

    Matroid u36 = Matroid::uniform(3, 6);
    CHECK(g_invariant_parallel(u36) == u36.g_invariant());

    // block splits exercise the permutation unranking at several widths
    for (int t : {2, 3, 5, 16}) {
        setenv("EULAB_THREADS", std::to_string(t).c_str(), 1);
        CHECK(g_invariant_parallel(pr) == pr.g_invariant());
    }
    unsetenv("EULAB_THREADS");

    CHECK_THROWS_AS(g_invariant_parallel(Matroid::uniform(2, 10)), size_limit_error);
}

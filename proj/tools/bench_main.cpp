// Benchmark comparing the serial reference implementations against the
// OpenMP kernels. Both sides compute exact values; the run fails if they
// ever disagree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "eulab/eulerian.hpp"
#include "eulab/invariants.hpp"
#include "eulab/matroid.hpp"
#include "eulab/parallel.hpp"

namespace {

double time_ms(const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

bool report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   %s\n", name, serial_ms, parallel_ms,
                equal ? "values equal" : "VALUES DIFFER");
    return equal;
}

}  // namespace

int main() {
    using namespace eulab;
    std::printf("threads: %d\n", thread_count());
    bool ok = true;

    {
        Matroid k4 = Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        std::map<Composition, Int> serial, parallel;
        double ts = time_ms([&] { serial = men_vector(k4); });
        double tp = time_ms([&] { parallel = men_vector_parallel(k4); });
        ok &= report("men_vector K4", ts, tp, serial == parallel);
    }
    {
        Matroid u47 = Matroid::uniform(4, 7);
        std::map<Composition, Int> serial, parallel;
        double ts = time_ms([&] { serial = men_vector(u47); });
        double tp = time_ms([&] { parallel = men_vector_parallel(u47); });
        ok &= report("men_vector U(4,7)", ts, tp, serial == parallel);
    }
    {
        Composition ones(7, 1);
        Int serial = 0, parallel = 0;
        double ts = time_ms([&] { serial = mixed_eulerian(ones); });
        double tp = time_ms([&] { parallel = mixed_eulerian_parallel(ones); });
        ok &= report("mixed_eulerian (1,...,1) n=7", ts, tp, serial == parallel);
    }
    {
        Matroid u48 = Matroid::uniform(4, 8);
        GInvariant serial, parallel;
        double ts = time_ms([&] { serial = u48.g_invariant(); });
        double tp = time_ms([&] { parallel = g_invariant_parallel(u48); });
        ok &= report("g_invariant U(4,8)", ts, tp, serial == parallel);
    }
    return ok ? 0 : 1;
}

#include "eulab/corpus.hpp"

namespace eulab {

std::vector<NamedMatroid> default_corpus() {
    std::vector<NamedMatroid> out;
    for (int m = 1; m <= 6; ++m)
        for (int r = 0; r <= m; ++r)
            out.push_back({"U(" + std::to_string(r) + "," + std::to_string(m) + ")",
                           Matroid::uniform(r, m)});

    out.push_back({"K4", Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
    out.push_back({"C4", Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})});

    // rank 2 on four elements with 2 and 3 parallel
    out.push_back({"parallel-rank2",
                   Matroid::from_bases(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})});
    // rank 2 on five elements from the partition {0,1} | {2,3} | {4}
    out.push_back({"partition-rank2",
                   Matroid::from_bases(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}})});
    // direct sum of U(2,3) on {0,1,2} and U(1,2) on {3,4}
    out.push_back({"u23-plus-u12",
                   Matroid::from_bases(5, {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}, {1, 2, 3}, {1, 2, 4}})});
    return out;
}

}  // namespace eulab

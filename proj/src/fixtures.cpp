#include "rainbow_forge/fixtures.hpp"

#include <stdexcept>

namespace rainbow_forge::fixtures {

SimpleGraph exceptional_graph() {
    return SimpleGraph::from_edges(
        10, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 6}, {0, 8},
             {1, 2}, {1, 3}, {1, 6}, {1, 7}, {1, 9},
             {2, 3}, {2, 6}, {2, 7}, {2, 9},
             {3, 4}, {3, 5}, {3, 6}, {3, 8},
             {4, 5}, {4, 7}, {4, 8}, {4, 9},
             {5, 7}, {5, 8}, {5, 9},
             {6, 7}, {6, 9},
             {7, 8},
             {8, 9}});
}

SimpleGraph blocked_matching_pattern(int which) {
    std::vector<std::pair<int, int>> cross;
    switch (which) {
        case 1:
            // t1 joined to all of a,b,c,d; t2 to a,c; t3 to b,d
            cross = {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 5}, {2, 5}, {1, 6}, {3, 6}};
            break;
        case 2:
            // t1 and t2 joined to a,b,c; t3 to a,d
            cross = {{0, 4}, {1, 4}, {2, 4}, {0, 5}, {1, 5}, {2, 5}, {0, 6}, {3, 6}};
            break;
        case 3:
            // t1 to a,b,c; t2 to a,b,d; t3 to a,b
            cross = {{0, 4}, {1, 4}, {2, 4}, {0, 5}, {1, 5}, {3, 5}, {0, 6}, {1, 6}};
            break;
        default:
            throw std::domain_error("blocked_matching_pattern: which must be 1, 2 or 3");
    }
    cross.insert(cross.end(), {{0, 1}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    return SimpleGraph::from_edges(7, cross);
}

SimpleGraph base_case_k2_graph() {
    return SimpleGraph::from_edges(6, {{0, 1}, {0, 2}, {1, 2},
                                       {0, 3}, {0, 4}, {0, 5},
                                       {1, 3}, {1, 4}, {1, 5},
                                       {2, 3}, {2, 4}, {2, 5}});
}

std::vector<TrianglePacking> base_case_k2_packings() {
    return {
        TrianglePacking{{{0, 3, 4}, {5, 1, 2}}},
        TrianglePacking{{{1, 3, 4}, {5, 0, 2}}},
        TrianglePacking{{{2, 3, 4}, {5, 0, 1}}},
    };
}

SimpleGraph base_case_k3_graph(int overlap) {
    std::vector<std::pair<int, int>> missing = {{3, 4}, {3, 6}, {4, 6}};  // triangle v,v',w
    switch (overlap) {
        case 0: missing.insert(missing.end(), {{0, 5}, {0, 7}, {0, 8}}); break;
        case 1: missing.insert(missing.end(), {{0, 3}, {0, 5}, {0, 7}}); break;
        case 2: missing.insert(missing.end(), {{0, 3}, {0, 4}, {0, 5}}); break;
        case 3: missing.insert(missing.end(), {{0, 3}, {0, 4}, {0, 6}}); break;
        default: throw std::domain_error("base_case_k3_graph: overlap must be 0..3");
    }
    SimpleGraph g = SimpleGraph::complete(9);
    for (auto [u, v] : missing) g.remove_edge(u, v);
    return g;
}

std::vector<TrianglePacking> base_case_k3_packings() {
    return {
        TrianglePacking{{{1, 0, 3}, {4, 2, 5}, {6, 7, 8}}},
        TrianglePacking{{{2, 0, 3}, {4, 1, 8}, {6, 5, 7}}},
        TrianglePacking{{{7, 0, 3}, {4, 5, 8}, {6, 1, 2}}},
    };
}

}  // namespace rainbow_forge::fixtures

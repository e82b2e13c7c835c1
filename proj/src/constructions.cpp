#include "rainbow_forge/constructions.hpp"

#include <stdexcept>

namespace rainbow_forge {

namespace {

void require_domain(int n, int k) {
    if (k < 2) throw std::domain_error("construction: requires k >= 2");
    if (n < 3 * k) throw std::domain_error("construction: requires n >= 3k");
}

}  // namespace

EdgeColoring clique_plus_pendant_coloring(int n, int k) {
    require_domain(n, k);
    int clique = 3 * k - 1;
    std::vector<int> colors(static_cast<std::size_t>(edge_slots(n)), 0);
    int next = 0;
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v)
            colors[static_cast<std::size_t>(edge_index(n, u, v))] = ++next;
    for (int i = clique; i < n; ++i) {
        ++next;  // one fresh color per appended vertex
        for (int u = 0; u < i; ++u)
            colors[static_cast<std::size_t>(edge_index(n, u, i))] = next;
    }
    return EdgeColoring(n, std::move(colors));
}

EdgeColoring bipartite_join_coloring(int n, int k) {
    require_domain(n, k);
    int apex = k - 2;
    int s = (n - k + 2) / 2;
    auto side = [&](int v) { return v < apex ? 0 : (v < apex + s ? 1 : 2); };
    std::vector<int> colors(static_cast<std::size_t>(edge_slots(n)), 0);
    int next = 0;
    std::vector<std::size_t> extra;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::size_t idx = static_cast<std::size_t>(edge_index(n, u, v));
            if (side(u) != 0 && side(u) == side(v))
                extra.push_back(idx);  // inside S or inside T
            else
                colors[idx] = ++next;
        }
    ++next;
    for (std::size_t idx : extra) colors[idx] = next;
    return EdgeColoring(n, std::move(colors));
}

}  // namespace rainbow_forge

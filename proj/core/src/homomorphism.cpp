#include "adjsem/homomorphism.hpp"

#include <algorithm>

namespace adjsem {

namespace {

struct Searcher {
    const Graph& g;
    const Graph& h;
    const std::vector<HomConstraint>& constraints;
    std::optional<std::size_t> limit;
    std::vector<int> map;
    std::vector<std::vector<int>> results;

    bool consistent(int v, int w) const {
        // Edges between v and every assigned vertex (including the loop).
        if (g.has_edge(v, v) && !h.has_edge(w, w)) return false;
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v) && !h.has_edge(map[u], w)) return false;
            if (g.has_edge(v, u) && !h.has_edge(w, map[u])) return false;
        }
        for (const auto& c : constraints) {
            if (std::max(c.a, c.b) != v) continue;
            int wa = (c.a == v) ? w : map[c.a];
            int wb = (c.b == v) ? w : map[c.b];
            if (c.kind == HomConstraint::Kind::DistinctImages && wa == wb) return false;
            if (c.kind == HomConstraint::Kind::NonAdjacentImages && h.has_edge(wa, wb)) return false;
        }
        return true;
    }

    // Returns false once the limit is reached.
    bool search(int v) {
        if (v == g.vertex_count()) {
            results.push_back(map);
            return !limit || results.size() < *limit;
        }
        for (int w = 0; w < h.vertex_count(); ++w) {
            if (!consistent(v, w)) continue;
            map[v] = w;
            if (!search(v + 1)) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<std::vector<int>> homomorphisms(const Graph& g, const Graph& h,
                                            std::optional<std::size_t> limit,
                                            const std::vector<HomConstraint>& constraints) {
    if (limit && *limit == 0) return {};
    Searcher s{g, h, constraints, limit, std::vector<int>(g.vertex_count(), -1), {}};
    s.search(0);
    return std::move(s.results);
}

std::optional<std::vector<int>> first_homomorphism(const Graph& g, const Graph& h,
                                                   const std::vector<HomConstraint>& constraints) {
    auto found = homomorphisms(g, h, 1, constraints);
    if (found.empty()) return std::nullopt;
    return found.front();
}

bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.vertex_count()) return false;
    for (int v : map)
        if (v < 0 || v >= h.vertex_count()) return false;
    for (auto [a, b] : g.edges())
        if (!h.has_edge(map[a], map[b])) return false;
    return true;
}

}  // namespace adjsem

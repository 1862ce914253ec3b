#include "adjsem/membership.hpp"

#include <stdexcept>

#include "adjsem/homomorphism.hpp"

namespace adjsem {

namespace {

std::optional<HomWitness> search_generators(const Graph& g, const std::vector<Graph>& generators,
                                            const std::vector<HomConstraint>& constraints) {
    for (int gi = 0; gi < static_cast<int>(generators.size()); ++gi)
        if (auto m = first_homomorphism(g, generators[gi], constraints)) return HomWitness{gi, *m};
    return std::nullopt;
}

MembershipVerdict member_impl(const Graph& g, const std::vector<Graph>& generators, bool need_existence) {
    if (generators.empty()) throw std::invalid_argument("empty generator list");
    MembershipVerdict v;
    if (g.vertex_count() == 0) {
        v.member = true;  // the empty graph lies in every uH class
        return v;
    }
    // Found homomorphisms are reused for later obligations; certificates
    // still record one map per obligation.
    std::vector<HomWitness> cache;
    auto satisfies_constraints = [&](const HomWitness& w, const std::vector<HomConstraint>& cs) {
        const Graph& h = generators[w.generator];
        for (const auto& c : cs) {
            int wa = w.map[c.a], wb = w.map[c.b];
            if (c.kind == HomConstraint::Kind::DistinctImages && wa == wb) return false;
            if (c.kind == HomConstraint::Kind::NonAdjacentImages && h.has_edge(wa, wb)) return false;
        }
        return true;
    };
    auto obtain = [&](const std::vector<HomConstraint>& cs) -> std::optional<HomWitness> {
        for (const auto& w : cache)
            if (satisfies_constraints(w, cs)) return w;
        auto found = search_generators(g, generators, cs);
        if (found) cache.push_back(*found);
        return found;
    };

    if (need_existence) {
        auto w = obtain({});
        if (!w) {
            v.failure = MembershipFailure{MembershipFailure::Kind::NoHomomorphism};
            return v;
        }
        v.existence = *w;
    }
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto w = obtain({{HomConstraint::Kind::DistinctImages, a, b}});
            if (!w) {
                v.failure = MembershipFailure{MembershipFailure::Kind::UnseparatedPair, a, b};
                return v;
            }
            v.separations.push_back({SeparationRecord::Kind::VertexPair, a, b, *w});
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            auto w = obtain({{HomConstraint::Kind::NonAdjacentImages, a, b}});
            if (!w) {
                v.failure = MembershipFailure{MembershipFailure::Kind::UnseparatedNonEdge, a, b};
                return v;
            }
            v.separations.push_back({SeparationRecord::Kind::NonEdge, a, b, *w});
        }
    v.member = true;
    return v;
}

}  // namespace

MembershipVerdict uh_member(const Graph& g, const std::vector<Graph>& generators) {
    return member_impl(g, generators, true);
}

MembershipVerdict quasivariety_member(const Graph& g, const std::vector<Graph>& generators) {
    return member_impl(g, generators, false);
}

bool variety_member_adjacency(const Graph& g, const std::vector<Graph>& generators) {
    return uh_member(g, generators).member;
}

bool embed_certificate(const Graph& g, const MembershipVerdict& verdict,
                       const std::vector<Graph>& generators) {
    if (!verdict.member) throw std::invalid_argument("not a success certificate");
    std::vector<const HomWitness*> homs;
    if (verdict.existence) homs.push_back(&*verdict.existence);
    for (const auto& s : verdict.separations) homs.push_back(&s.hom);

    int n = g.vertex_count();
    for (const auto* w : homs)
        if (!is_homomorphism(g, generators[w->generator], w->map)) return false;

    // Image tuples must be pairwise distinct and their product adjacency
    // must agree with g: that makes v -> (phi_1(v), phi_2(v), ...) an
    // induced-subgraph embedding into the product of the targets.  (The
    // empty certificate embeds the empty graph into the empty product.)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b) {
                bool distinct = false;
                for (const auto* w : homs)
                    if (w->map[a] != w->map[b]) distinct = true;
                if (!distinct) return false;
            }
            bool product_edge = true;
            for (const auto* w : homs)
                if (!generators[w->generator].has_edge(w->map[a], w->map[b])) product_edge = false;
            if (product_edge != g.has_edge(a, b)) return false;
        }
    return true;
}

bool k_colorable(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return first_homomorphism(g, catalog_graph("K", k)).has_value();
}

}  // namespace adjsem

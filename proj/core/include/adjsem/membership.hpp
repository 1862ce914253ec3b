#pragma once

#include <optional>
#include <vector>

#include "adjsem/graph.hpp"

namespace adjsem {

struct HomWitness {
    int generator = -1;  // index into the generator list
    std::vector<int> map;
};

struct SeparationRecord {
    enum class Kind { VertexPair, NonEdge };
    Kind kind;
    int a, b;
    HomWitness hom;
};

struct MembershipFailure {
    enum class Kind { NoHomomorphism, UnseparatedPair, UnseparatedNonEdge };
    Kind kind;
    int a = -1, b = -1;
};

/// Outcome of the separation-based membership test.  A success records one
/// homomorphism per obligation; a failure names the first violated
/// requirement in canonical order.
struct MembershipVerdict {
    bool member = false;
    std::optional<HomWitness> existence;
    std::vector<SeparationRecord> separations;
    std::optional<MembershipFailure> failure;
};

/// Membership of g in the uH class generated by finitely many finite
/// graphs: one homomorphism into a generator exists, every distinct vertex
/// pair is separated by a homomorphism, and every non-edge is mapped onto a
/// non-edge by some homomorphism.  The empty graph is a member of every
/// class.
MembershipVerdict uh_member(const Graph& g, const std::vector<Graph>& generators);

/// As uh_member but without the existence requirement.
MembershipVerdict quasivariety_member(const Graph& g, const std::vector<Graph>& generators);

/// The variety bridge: A(g) lies in the variety generated by the adjacency
/// semigroups of the generators iff g lies in their uH class.
bool variety_member_adjacency(const Graph& g, const std::vector<Graph>& generators);

/// Structural validation of a success verdict: maps g into the product of
/// the certificate's target graphs and checks the image is an induced
/// subgraph isomorphic to g (vertex tuples distinct, edges exact).  The
/// product is examined only on the image tuples.
bool embed_certificate(const Graph& g, const MembershipVerdict& verdict,
                       const std::vector<Graph>& generators);

/// Homomorphism into the complete loopless graph on k vertices.
bool k_colorable(const Graph& g, int k);

}  // namespace adjsem

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "adjsem/graph.hpp"
#include "adjsem/unary_semigroup.hpp"

namespace adjsem {

/// Element numbering of an adjacency semigroup: 0 is the zero, the pair of
/// the i-th and j-th vertices is 1 + i*n + j.  The empty graph gives the
/// one-element semigroup.
struct AdjacencyIndexing {
    Graph graph;

    int element(int i, int j) const { return 1 + i * graph.vertex_count() + j; }
    std::optional<std::pair<int, int>> pair_of(int element) const;
    std::string element_label(int element) const;
};

struct AdjacencySemigroup {
    UnarySemigroup sem;
    AdjacencyIndexing indexing;
};

/// A(G): product (x,y)(z,t) = (x,t) when y ~ z and 0 otherwise; reversion
/// swaps coordinates and fixes 0.
AdjacencySemigroup adjacency_semigroup(const Graph& g);

/// The square band on I x I, I of size n >= 1: (i,j)(k,l) = (i,l),
/// (i,j)' = (j,i).
UnarySemigroup square_band(int n);

struct Recognition {
    std::optional<Graph> graph;
    std::string reason;  // first failed hypothesis when graph is absent
    bool applicable() const { return graph.has_value(); }
};

/// Decides whether the algebra is the adjacency semigroup of some reflexive
/// graph and reconstructs that graph: hypotheses are the four identities
/// xx'x = x, x'' = x, (x'x)' = x'x, (xy)' = y'(x'xyy')'x' plus the semigroup
/// reduct being completely 0-simple with trivial subgroups, decomposed into
/// explicit finite checks.  Vertices of the result are the reversion-fixed
/// nonzero elements; rows and columns are indexed by the fixed points of
/// their R- and L-classes.
Recognition recognize_reflexive_adjacency(const UnarySemigroup& s);

/// Trahtman's criterion: a reversion-free identity holds in the semigroup
/// reduct of A(S2) iff the two words share first letter, last letter, and
/// the set of two-letter factors.
bool a2_identity(const Term& u, const Term& v);

}  // namespace adjsem

#pragma once

#include <map>
#include <optional>
#include <string>

#include "adjsem/pattern_graph.hpp"
#include "adjsem/unary_semigroup.hpp"

namespace adjsem {

/// A failing interpretation of an identity: a concrete adjacency semigroup,
/// an assignment, and the two distinct values it produces.
struct Countermodel {
    UnarySemigroup semigroup;
    std::string description;
    std::map<std::string, int> assignment;
    int lhs_value = -1, rhs_value = -1;

    bool reverifies(const Identity& id) const;
};

struct DecideResult {
    bool holds = false;
    std::optional<Countermodel> countermodel;
};

/// Equational theory of the adjacency-semigroup varieties: the identity
/// holds iff the two pattern graphs coincide (in the given mode).  On
/// failure a countermodel is constructed and re-verified before being
/// returned: the two-element algebra when the alphabets differ, otherwise
/// the adjacency semigroup of one of the (mode-closed) pattern graphs under
/// the canonical assignment x -> (l_x, r_x).  In reflexive/symmetric mode
/// the countermodel graph is reflexive/symmetric.
DecideResult decide_identity(const Identity& id, PatternMode mode);

}  // namespace adjsem

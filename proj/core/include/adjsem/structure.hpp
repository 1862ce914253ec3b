#pragma once

#include <optional>
#include <vector>

#include "adjsem/unary_semigroup.hpp"

namespace adjsem {

UnarySemigroup direct_product(const UnarySemigroup& s, const UnarySemigroup& t);

/// Closure of `generators` under multiplication and reversion, reindexed in
/// increasing order of the original element indices.
UnarySemigroup subalgebra_generated(const UnarySemigroup& s, const std::vector<int>& generators);

bool is_ideal(const UnarySemigroup& s, const std::vector<int>& subset);
bool is_reversion_closed(const UnarySemigroup& s, const std::vector<int>& subset);

/// Collapses a reversion-closed two-sided ideal to a single zero (new index
/// 0); the surviving elements keep their relative order.
UnarySemigroup rees_quotient(const UnarySemigroup& s, const std::vector<int>& ideal);

/// Complement of the unique maximal J-class, when that complement is a
/// nonempty proper ideal.
std::optional<std::vector<int>> unique_maximal_ideal(const UnarySemigroup& s);

/// Green's equivalences on the semigroup reduct, as class ids (the least
/// element index of each class).
struct GreensPartitions {
    std::vector<int> l_class, r_class, j_class, h_class;
};

GreensPartitions greens_partitions(const UnarySemigroup& s);

/// Bijection preserving mul and inv, found by backtracking with invariant
/// pruning; deterministic first witness.  Orders above `cap` are rejected.
std::optional<std::vector<int>> isomorphism(const UnarySemigroup& s, const UnarySemigroup& t,
                                            int cap = 32);

}  // namespace adjsem

#pragma once

#include <optional>
#include <vector>

#include "adjsem/graph.hpp"

namespace adjsem {

/// Extra requirement on a homomorphism, checked as soon as both endpoints
/// are assigned.  Used by the separation conditions of membership testing.
struct HomConstraint {
    enum class Kind { DistinctImages, NonAdjacentImages };
    Kind kind;
    int a, b;  // vertices of the source graph
};

/// All homomorphisms g -> h in lexicographic order of the image vector
/// (source vertices in declaration order).  The empty map is the unique
/// homomorphism from the empty graph.  `limit` truncates the enumeration;
/// limit = 1 acts as an existence test.
std::vector<std::vector<int>> homomorphisms(const Graph& g, const Graph& h,
                                            std::optional<std::size_t> limit = std::nullopt,
                                            const std::vector<HomConstraint>& constraints = {});

std::optional<std::vector<int>> first_homomorphism(const Graph& g, const Graph& h,
                                                   const std::vector<HomConstraint>& constraints = {});

bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

}  // namespace adjsem

#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "adjsem/graph.hpp"
#include "adjsem/term.hpp"

namespace adjsem {

enum class PatternMode { Plain, Reflexive, Symmetric };

PatternMode parse_pattern_mode(const std::string& name);  // plain | ref | symm

/// Left or right side of a letter: the vertices l_x, r_x.
struct SideVertex {
    bool right = false;
    std::string letter;
    auto operator<=>(const SideVertex&) const = default;
    std::string display() const { return (right ? "r_" : "l_") + letter; }
};

/// The graph of a word: one l/r vertex pair per alphabet letter, directed
/// adjacencies between sides, and marked initial/final vertices.  Equality
/// is literal equality of labeled vertices, adjacency set and markers, not
/// up to isomorphism.
struct PatternGraph {
    std::vector<std::string> alphabet;  // sorted
    std::set<std::pair<SideVertex, SideVertex>> adjacencies;
    SideVertex initial, final;
    PatternMode mode = PatternMode::Plain;

    bool operator==(const PatternGraph& o) const {
        return alphabet == o.alphabet && adjacencies == o.adjacencies && initial == o.initial &&
               final == o.final;
    }
};

PatternGraph pattern_graph(const Term& t, PatternMode mode = PatternMode::Plain);

/// View as an ordinary Graph on vertices l_x, r_x (alphabet order, left
/// side first), losing the markers.
Graph pattern_as_graph(const PatternGraph& p);

std::string pattern_to_text(const PatternGraph& p);
/// DOT with the initial vertex marked by an arrow from a synthetic source
/// and the final vertex drawn with a double border.
std::string pattern_to_dot(const PatternGraph& p);

}  // namespace adjsem

#include "adjsem/pattern_graph.hpp"

#include <sstream>
#include <stdexcept>

namespace adjsem {

PatternMode parse_pattern_mode(const std::string& name) {
    if (name == "plain") return PatternMode::Plain;
    if (name == "ref") return PatternMode::Reflexive;
    if (name == "symm") return PatternMode::Symmetric;
    throw std::invalid_argument("unknown mode: " + name + " (expected plain, ref or symm)");
}

namespace {

struct Core {
    std::set<std::pair<SideVertex, SideVertex>> adjacencies;
    SideVertex initial, final;
};

// The inductive definition: a letter contributes no adjacencies and is
// entered on its left side and left on its right side; reversion swaps the
// markers; a product joins the final side of the left part to the initial
// side of the right part.
Core build(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Letter:
            return {{}, {false, t.letter_name()}, {true, t.letter_name()}};
        case Term::Kind::Rev: {
            Core c = build(t.child());
            std::swap(c.initial, c.final);
            return c;
        }
        case Term::Kind::Mul: {
            Core acc = build(t.factors()[0]);
            for (std::size_t i = 1; i < t.factors().size(); ++i) {
                Core next = build(t.factors()[i]);
                acc.adjacencies.insert(next.adjacencies.begin(), next.adjacencies.end());
                acc.adjacencies.emplace(acc.final, next.initial);
                acc.final = next.final;
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

PatternGraph pattern_graph(const Term& t, PatternMode mode) {
    Core c = build(t);
    PatternGraph p;
    p.alphabet = t.alphabet();
    p.adjacencies = std::move(c.adjacencies);
    p.initial = c.initial;
    p.final = c.final;
    p.mode = mode;
    if (mode == PatternMode::Reflexive) {
        for (const auto& x : p.alphabet) {
            p.adjacencies.emplace(SideVertex{false, x}, SideVertex{false, x});
            p.adjacencies.emplace(SideVertex{true, x}, SideVertex{true, x});
        }
    } else if (mode == PatternMode::Symmetric) {
        auto orig = p.adjacencies;
        for (const auto& [a, b] : orig) p.adjacencies.emplace(b, a);
    }
    return p;
}

Graph pattern_as_graph(const PatternGraph& p) {
    std::vector<std::string> names;
    for (const auto& x : p.alphabet) {
        names.push_back("l_" + x);
        names.push_back("r_" + x);
    }
    Graph g(names);
    for (const auto& [a, b] : p.adjacencies) g.add_edge(a.display(), b.display());
    return g;
}

std::string pattern_to_text(const PatternGraph& p) {
    std::ostringstream out;
    out << "letters:";
    for (const auto& x : p.alphabet) out << ' ' << x;
    out << "\ninitial: " << p.initial.display() << "\nfinal: " << p.final.display() << "\nadjacencies:";
    for (const auto& [a, b] : p.adjacencies) out << " (" << a.display() << "," << b.display() << ")";
    out << '\n';
    return out.str();
}

std::string pattern_to_dot(const PatternGraph& p) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& x : p.alphabet)
        for (bool right : {false, true}) {
            SideVertex v{right, x};
            out << "  \"" << v.display() << "\"";
            if (v == p.final) out << " [peripheries=2]";
            out << ";\n";
        }
    out << "  __start [shape=point style=invis];\n";
    out << "  __start -> \"" << p.initial.display() << "\";\n";
    for (const auto& [a, b] : p.adjacencies)
        out << "  \"" << a.display() << "\" -> \"" << b.display() << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace adjsem

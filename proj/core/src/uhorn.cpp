#include "adjsem/uhorn.hpp"

#include <algorithm>
#include <sstream>

namespace adjsem {

AtomicFormula adj_atom(std::string left, std::string right) {
    return {AtomicFormula::Kind::Adjacency, std::move(left), std::move(right)};
}

AtomicFormula eq_atom(std::string left, std::string right) {
    return {AtomicFormula::Kind::Equality, std::move(left), std::move(right)};
}

namespace {

void collect(const AtomicFormula& a, std::vector<std::string>& vars) {
    if (std::find(vars.begin(), vars.end(), a.left) == vars.end()) vars.push_back(a.left);
    if (std::find(vars.begin(), vars.end(), a.right) == vars.end()) vars.push_back(a.right);
}

bool atom_holds(const Graph& g, const AtomicFormula& a, const std::map<std::string, int>& env) {
    int l = env.at(a.left), r = env.at(a.right);
    return a.kind == AtomicFormula::Kind::Equality ? l == r : g.has_edge(l, r);
}

bool assignment_ok(const Graph& g, const UHSentence& s, const std::map<std::string, int>& env) {
    if (const auto* qi = std::get_if<QuasiIdentity>(&s)) {
        for (const auto& p : qi->premises)
            if (!atom_holds(g, p, env)) return true;
        return atom_holds(g, qi->conclusion, env);
    }
    const auto& nd = std::get<NegDisjunction>(s);
    for (const auto& a : nd.negated)
        if (!atom_holds(g, a, env)) return true;  // some disjunct is true
    return false;
}

}  // namespace

std::vector<std::string> sentence_variables(const UHSentence& s) {
    std::vector<std::string> vars;
    if (const auto* qi = std::get_if<QuasiIdentity>(&s)) {
        for (const auto& p : qi->premises) collect(p, vars);
        collect(qi->conclusion, vars);
    } else {
        for (const auto& a : std::get<NegDisjunction>(s).negated) collect(a, vars);
    }
    return vars;
}

std::optional<VertexAssignment> find_failing_assignment(const Graph& g, const UHSentence& s) {
    auto vars = sentence_variables(s);
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;  // no assignments, nothing fails
    std::vector<int> vals(vars.size(), 0);
    while (true) {
        VertexAssignment env;
        for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = vals[i];
        if (!assignment_ok(g, s, env)) return env;
        std::size_t i = vals.size();
        while (i > 0 && vals[i - 1] == n - 1) vals[--i] = 0;
        if (i == 0) return std::nullopt;
        ++vals[i - 1];
    }
}

bool satisfies(const Graph& g, const UHSentence& s) { return !find_failing_assignment(g, s); }

namespace {

struct SentenceLexer {
    std::string text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    std::string variable() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || text[pos] < 'a' || text[pos] > 'z')
            throw ParseError("expected variable at position " + std::to_string(pos + 1));
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        return text.substr(start, pos - start);
    }
    AtomicFormula atom() {
        std::string l = variable();
        skip_ws();
        if (eat("~")) return adj_atom(l, variable());
        if (eat("=")) return eq_atom(l, variable());
        throw ParseError("expected '~' or '=' at position " + std::to_string(pos + 1));
    }
};

}  // namespace

UHSentence parse_uh_sentence(const std::string& text) {
    SentenceLexer lx{text};
    lx.skip_ws();
    if (lx.pos < lx.text.size() && lx.text[lx.pos] == '!') {
        NegDisjunction nd;
        do {
            if (!lx.eat("!")) throw ParseError("expected '!' at position " + std::to_string(lx.pos + 1));
            nd.negated.push_back(lx.atom());
        } while (lx.eat("|"));
        if (!lx.at_end()) throw ParseError("trailing input at position " + std::to_string(lx.pos + 1));
        return nd;
    }
    QuasiIdentity qi;
    if (!lx.eat("->")) {
        qi.premises.push_back(lx.atom());
        while (lx.eat("&")) qi.premises.push_back(lx.atom());
        if (!lx.eat("->")) throw ParseError("expected '->' at position " + std::to_string(lx.pos + 1));
    }
    qi.conclusion = lx.atom();
    if (!lx.at_end()) throw ParseError("trailing input at position " + std::to_string(lx.pos + 1));
    return qi;
}

namespace {

std::string format_atom(const AtomicFormula& a) {
    return a.left + (a.kind == AtomicFormula::Kind::Adjacency ? " ~ " : " = ") + a.right;
}

}  // namespace

std::string format_uh_sentence(const UHSentence& s) {
    std::ostringstream out;
    if (const auto* qi = std::get_if<QuasiIdentity>(&s)) {
        for (std::size_t i = 0; i < qi->premises.size(); ++i)
            out << (i ? " & " : "") << format_atom(qi->premises[i]);
        out << (qi->premises.empty() ? "-> " : " -> ") << format_atom(qi->conclusion);
    } else {
        const auto& nd = std::get<NegDisjunction>(s);
        for (std::size_t i = 0; i < nd.negated.size(); ++i)
            out << (i ? " | " : "") << "!" << format_atom(nd.negated[i]);
    }
    return out.str();
}

const std::vector<std::pair<std::string, std::vector<UHSentence>>>& standard_laws() {
    static const auto* laws = [] {
        auto reflexive = QuasiIdentity{{}, adj_atom("x", "x")};
        auto antireflexive = NegDisjunction{{adj_atom("x", "x")}};
        auto symmetric = QuasiIdentity{{adj_atom("x", "y")}, adj_atom("y", "x")};
        auto antisymmetric = QuasiIdentity{{adj_atom("x", "y"), adj_atom("y", "x")}, eq_atom("x", "y")};
        auto transitive = QuasiIdentity{{adj_atom("x", "y"), adj_atom("y", "z")}, adj_atom("x", "z")};
        auto complete_looped = QuasiIdentity{{}, adj_atom("x", "y")};
        auto v = new std::vector<std::pair<std::string, std::vector<UHSentence>>>{
            {"reflexive", {reflexive}},
            {"antireflexive", {antireflexive}},
            {"symmetric", {symmetric}},
            {"antisymmetric", {antisymmetric}},
            {"transitive", {transitive}},
            {"preorder", {reflexive, transitive}},
            {"equivalence", {reflexive, transitive, symmetric}},
            {"partial order", {reflexive, transitive, antisymmetric}},
            {"antichain", {reflexive, transitive, symmetric, antisymmetric}},
            {"complete-looped", {complete_looped}},
        };
        return v;
    }();
    return *laws;
}

std::vector<std::string> classify_standard(const Graph& g) {
    std::vector<std::string> out;
    for (const auto& [name, sentences] : standard_laws()) {
        bool all = true;
        for (const auto& s : sentences)
            if (!satisfies(g, s)) {
                all = false;
                break;
            }
        if (all) out.push_back(name);
    }
    return out;
}

}  // namespace adjsem

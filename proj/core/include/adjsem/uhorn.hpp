#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adjsem/graph.hpp"

namespace adjsem {

struct AtomicFormula {
    enum class Kind { Adjacency, Equality };
    Kind kind;
    std::string left, right;
    bool operator==(const AtomicFormula&) const = default;
};

AtomicFormula adj_atom(std::string left, std::string right);
AtomicFormula eq_atom(std::string left, std::string right);

/// Quasi-identity: premises -> conclusion.  Zero premises represent a
/// universally quantified atomic formula.
struct QuasiIdentity {
    std::vector<AtomicFormula> premises;
    AtomicFormula conclusion;
    bool operator==(const QuasiIdentity&) const = default;
};

/// Second kind of uH sentence: a disjunction of negated atoms.
struct NegDisjunction {
    std::vector<AtomicFormula> negated;  // nonempty
    bool operator==(const NegDisjunction&) const = default;
};

using UHSentence = std::variant<QuasiIdentity, NegDisjunction>;

/// Assignment of sentence variables to vertices of a target graph.
using VertexAssignment = std::map<std::string, int>;

/// Variables in order of first appearance; this order drives assignment
/// enumeration everywhere.
std::vector<std::string> sentence_variables(const UHSentence& s);

/// True iff every total assignment of the sentence's variables satisfies it.
/// The empty graph satisfies every uH sentence.
bool satisfies(const Graph& g, const UHSentence& s);

/// First failing assignment in enumeration order, if any.
std::optional<VertexAssignment> find_failing_assignment(const Graph& g, const UHSentence& s);

/// Text format: `a ~ b & c = d -> a ~ d`, `-> a ~ a`, `!a ~ a | !b = c`.
UHSentence parse_uh_sentence(const std::string& text);
std::string format_uh_sentence(const UHSentence& s);

// The familiar laws, by the names classify_standard reports.
const std::vector<std::pair<std::string, std::vector<UHSentence>>>& standard_laws();

}  // namespace adjsem

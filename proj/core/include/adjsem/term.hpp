#pragma once

#include <string>
#include <vector>

#include "adjsem/graph.hpp"

namespace adjsem {

/// A unary semigroup word: letters, binary multiplication, postfix
/// reversion.  Products are kept flattened (a Mul node never has a Mul
/// child), so structural equality is equality modulo associativity.
class Term {
public:
    enum class Kind { Letter, Mul, Rev };

    static Term letter(std::string name);
    static Term mul(std::vector<Term> factors);
    static Term mul(Term a, Term b);
    static Term rev(Term t);

    Kind kind() const { return kind_; }
    const std::string& letter_name() const;
    const std::vector<Term>& factors() const;  // Mul only
    const Term& child() const;                 // Rev only

    int node_count() const;
    /// Sorted, de-duplicated letter names.
    std::vector<std::string> alphabet() const;

    bool operator==(const Term&) const;

private:
    Term() = default;
    Kind kind_ = Kind::Letter;
    std::string name_;
    std::vector<Term> children_;
};

struct Identity {
    Term lhs, rhs;
    bool operator==(const Identity&) const = default;
};

/// Grammar: term := factor+ ; factor := atom "'"* ; atom := letter | "(" term ")" ;
/// letter := [a-z][0-9]*.  Reversion binds tighter than juxtaposition.
Term parse_term(const std::string& text);
std::string print_term(const Term& t);

Identity parse_identity(const std::string& lhs, const std::string& rhs);
std::string print_identity(const Identity& id);

}  // namespace adjsem

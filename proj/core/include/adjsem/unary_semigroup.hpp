#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjsem/term.hpp"

namespace adjsem {

/// Finite semigroup with an extra unary operation, given by dense tables.
/// Associativity is checked eagerly when loading from files and on demand
/// otherwise.
class UnarySemigroup {
public:
    UnarySemigroup(int order, std::vector<int> mul, std::vector<int> inv,
                   std::optional<int> zero = std::nullopt,
                   std::vector<std::string> labels = {});

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    std::optional<int> zero() const { return zero_; }

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int a) const;

    bool is_associative() const;
    /// First associativity violation (a,b,c), if any.
    std::optional<std::array<int, 3>> associativity_violation() const;
    bool is_idempotent(int a) const { return mul(a, a) == a; }
    /// The two-sided zero by table inspection, if present.
    std::optional<int> find_zero() const;

    bool operator==(const UnarySemigroup&) const;

private:
    int order_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::optional<int> zero_;
    std::vector<std::string> labels_;
};

/// Letter-indexed straight-line form of a term, for fast repeated
/// evaluation over one algebra.
struct CompiledTerm {
    // op >= 0: push letter slot op; -1: multiply top two; -2: reverse top.
    std::vector<int> ops;
    int max_stack = 0;
};

CompiledTerm compile_term(const Term& t, const std::vector<std::string>& letters);
int eval_compiled(const CompiledTerm& ct, const UnarySemigroup& s, const std::vector<int>& values);

int evaluate(const Term& t, const UnarySemigroup& s, const std::map<std::string, int>& assignment);

struct IdentityCheck {
    bool holds = true;
    std::map<std::string, int> witness;  // first failing assignment when !holds
    int lhs_value = -1, rhs_value = -1;
};

/// Exhaustive check of lhs = rhs under every assignment of the identity's
/// letters (sorted) to elements, in lexicographic order.  When both sides
/// share the same alphabet and the semigroup has a reversion-fixed zero,
/// assignments touching the zero are skipped; they cannot fail.  `jobs`
/// splits the outermost letter across threads; verdict and witness match
/// the sequential order exactly.
IdentityCheck check_identity(const UnarySemigroup& s, const Identity& id, int jobs = 1);

struct NamedIdentitySet {
    std::string name;
    std::vector<Identity> identities;
};

struct SetCheck {
    bool holds = true;
    std::vector<std::pair<Identity, IdentityCheck>> results;
};

SetCheck check_identity_set(const UnarySemigroup& s, const NamedIdentitySet& set, int jobs = 1);

/// File format: `order: n`, optional `zero: k`, `mul:` + n rows of n
/// entries, `inv:` + one row; `#` comments.
UnarySemigroup parse_semigroup(const std::string& text);
std::string serialize_semigroup(const UnarySemigroup& s);

}  // namespace adjsem

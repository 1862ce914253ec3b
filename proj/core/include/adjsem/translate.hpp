#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adjsem/term.hpp"
#include "adjsem/uhorn.hpp"

namespace adjsem {

/// Quasi-identity whose premises are adjacencies only.
struct ReducedQuasiIdentity {
    std::vector<std::pair<std::string, std::string>> premises;  // u_i ~ v_i
    AtomicFormula conclusion;
};

/// Eliminates premise equalities by substituting the lexicographically
/// least variable of each merged class throughout.
ReducedQuasiIdentity reduce_quasi_identity(const QuasiIdentity& q);

QuasiIdentity as_quasi_identity(const ReducedQuasiIdentity& r);

/// Replaces a second-kind sentence failing on `target` by a quasi-identity
/// with the same premises and a conclusion in fresh variables that cannot
/// hold there: an equality when the target has >= 2 vertices, an adjacency
/// when it has one.
QuasiIdentity second_kind_to_quasi(const NegDisjunction& d, const Graph& target);

/// Index sequence threading the premise blocks of D: starts and ends at the
/// first premise and passes through every ordered pair of premise indices.
struct SigmaSequence {
    std::vector<int> entries;  // 1-based premise indices
    bool valid_for(int premise_count) const;
};

SigmaSequence canonical_sigma(int premise_count);

struct BuiltD {
    Term d;
    SigmaSequence sigma;
    std::vector<Term> w;  // one block per premise
};

/// w_i = (u_i v_i)' s_i (u_i v_i')' s_i (u_i' v_i)' s_i (u_i' v_i')' and
/// D = w_sigma(1) t_(sigma(1),sigma(2)) ... w_sigma(m), with the s_i and
/// t_(i,j) fresh (named s1, t1_2, ... under the given prefix).
BuiltD build_d(const std::vector<std::pair<std::string, std::string>>& premises,
               std::optional<SigmaSequence> sigma = std::nullopt,
               const std::string& fresh_prefix = "");

enum class CompiledCase {
    Tautology,
    AtomicComplete,
    AtomicReflexive,
    AtomicOneVertex,
    QiEquals,
    QiEquals2Source,
    QiEquals2Target,
    Tau1, Tau2, Tau3, Tau4, Tau5, Tau6, Tau7, Tau8, Tau9,
};

std::string compiled_case_name(CompiledCase c);

struct CompiledIdentity {
    Identity identity;
    CompiledCase tag;
    std::vector<std::string> fresh_variables;
};

/// The sentence-to-identity compilation: for every graph H, the compiled
/// identity holds in A(H) iff H satisfies the reduced quasi-identity.
CompiledIdentity translate(const ReducedQuasiIdentity& r);

struct TranslationCheck {
    bool graph_side = false;
    bool semigroup_side = false;
    bool agree() const { return graph_side == semigroup_side; }
};

/// Evaluates both sides of the compilation equivalence on a finite graph.
TranslationCheck verify_translation(const Graph& h, const ReducedQuasiIdentity& r, int jobs = 1);

}  // namespace adjsem

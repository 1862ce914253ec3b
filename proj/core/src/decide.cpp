#include "adjsem/decide.hpp"

#include <algorithm>
#include <stdexcept>

#include "adjsem/adjacency.hpp"

namespace adjsem {

bool Countermodel::reverifies(const Identity& id) const {
    return evaluate(id.lhs, semigroup, assignment) == lhs_value &&
           evaluate(id.rhs, semigroup, assignment) == rhs_value && lhs_value != rhs_value;
}

namespace {

std::optional<Countermodel> alphabet_mismatch_model(const Identity& id) {
    auto la = id.lhs.alphabet();
    auto ra = id.rhs.alphabet();
    if (la == ra) return std::nullopt;
    // Letters private to one side go to 0, everything else to the nonzero
    // idempotent of A(1); the side with a private letter evaluates to 0 and
    // the other side does not.
    auto a1 = adjacency_semigroup(Graph::one_loop());
    std::vector<std::string> zeroed;
    std::set_difference(la.begin(), la.end(), ra.begin(), ra.end(), std::back_inserter(zeroed));
    if (zeroed.empty())
        std::set_difference(ra.begin(), ra.end(), la.begin(), la.end(), std::back_inserter(zeroed));
    Countermodel cm{a1.sem, "A(LOOP1)", {}, 0, 0};
    for (const auto& x : la) cm.assignment.emplace(x, 1);
    for (const auto& x : ra) cm.assignment.emplace(x, 1);
    for (const auto& x : zeroed) cm.assignment[x] = 0;
    cm.lhs_value = evaluate(id.lhs, cm.semigroup, cm.assignment);
    cm.rhs_value = evaluate(id.rhs, cm.semigroup, cm.assignment);
    if (cm.lhs_value == cm.rhs_value) return std::nullopt;
    return cm;
}

std::optional<Countermodel> canonical_model(const Identity& id, const PatternGraph& p,
                                            const std::string& desc) {
    auto as = adjacency_semigroup(pattern_as_graph(p));
    Countermodel cm{as.sem, desc, {}, 0, 0};
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
        // x -> (l_x, r_x); vertices come in l,r order per letter.
        cm.assignment[p.alphabet[i]] = as.indexing.element(2 * static_cast<int>(i), 2 * static_cast<int>(i) + 1);
    }
    cm.lhs_value = evaluate(id.lhs, cm.semigroup, cm.assignment);
    cm.rhs_value = evaluate(id.rhs, cm.semigroup, cm.assignment);
    if (cm.lhs_value == cm.rhs_value) return std::nullopt;
    return cm;
}

}  // namespace

DecideResult decide_identity(const Identity& id, PatternMode mode) {
    PatternGraph pl = pattern_graph(id.lhs, mode);
    PatternGraph pr = pattern_graph(id.rhs, mode);
    if (pl == pr) return {true, std::nullopt};

    std::optional<Countermodel> cm = alphabet_mismatch_model(id);
    if (!cm) cm = canonical_model(id, pl, "A(G[lhs])");
    if (!cm) cm = canonical_model(id, pr, "A(G[rhs])");
    if (!cm || !cm->reverifies(id))
        throw std::logic_error("decide_identity: no verifying countermodel for a failing identity");
    return {false, std::move(cm)};
}

}  // namespace adjsem

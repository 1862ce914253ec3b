#include "adjsem/translate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "adjsem/adjacency.hpp"

namespace adjsem {

ReducedQuasiIdentity reduce_quasi_identity(const QuasiIdentity& q) {
    // Union-find with the lexicographically least variable as representative.
    std::map<std::string, std::string> parent;
    auto ensure = [&](const std::string& x) { parent.emplace(x, x); };
    std::function<std::string(const std::string&)> find = [&](const std::string& x) -> std::string {
        auto& p = parent.at(x);
        if (p == x) return x;
        p = find(p);
        return p;
    };
    auto unite = [&](const std::string& a, const std::string& b) {
        auto ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (rb < ra) std::swap(ra, rb);
        parent[rb] = ra;
    };
    for (const auto& v : sentence_variables(UHSentence{q})) ensure(v);
    for (const auto& p : q.premises)
        if (p.kind == AtomicFormula::Kind::Equality) unite(p.left, p.right);

    ReducedQuasiIdentity out;
    for (const auto& p : q.premises)
        if (p.kind == AtomicFormula::Kind::Adjacency) out.premises.emplace_back(find(p.left), find(p.right));
    out.conclusion = q.conclusion;
    out.conclusion.left = find(out.conclusion.left);
    out.conclusion.right = find(out.conclusion.right);
    return out;
}

QuasiIdentity as_quasi_identity(const ReducedQuasiIdentity& r) {
    QuasiIdentity q;
    for (const auto& [u, v] : r.premises) q.premises.push_back(adj_atom(u, v));
    q.conclusion = r.conclusion;
    return q;
}

QuasiIdentity second_kind_to_quasi(const NegDisjunction& d, const Graph& target) {
    if (satisfies(target, UHSentence{d}))
        throw std::invalid_argument("sentence does not fail on the target graph");
    auto vars = sentence_variables(UHSentence{d});
    auto fresh = [&](std::string base) {
        while (std::find(vars.begin(), vars.end(), base) != vars.end()) base = "f" + base;
        return base;
    };
    std::string p = fresh("p");
    std::string q = fresh("q");
    QuasiIdentity out;
    for (const auto& a : d.negated) out.premises.push_back(a);
    out.conclusion = target.vertex_count() >= 2 ? eq_atom(p, q) : adj_atom(p, q);
    return out;
}

bool SigmaSequence::valid_for(int premise_count) const {
    if (entries.size() < 2 || entries.front() != 1 || entries.back() != 1) return false;
    for (int e : entries)
        if (e < 1 || e > premise_count) return false;
    for (int i = 1; i <= premise_count; ++i)
        for (int j = 1; j <= premise_count; ++j) {
            bool found = false;
            for (std::size_t k = 0; k + 1 < entries.size(); ++k)
                if (entries[k] == i && entries[k + 1] == j) found = true;
            if (!found) return false;
        }
    return true;
}

SigmaSequence canonical_sigma(int premise_count) {
    SigmaSequence s;
    s.entries.push_back(1);
    for (int i = 1; i <= premise_count; ++i)
        for (int j = 1; j <= premise_count; ++j) {
            s.entries.push_back(i);
            s.entries.push_back(j);
        }
    s.entries.push_back(1);
    return s;
}

namespace {

std::string s_name(const std::string& prefix, int i) { return prefix + "s" + std::to_string(i); }
std::string t_name(const std::string& prefix, int i, int j) {
    return prefix + "t" + std::to_string(i) + "_" + std::to_string(j);
}

Term rev_pair(const std::string& a, bool prime_a, const std::string& b, bool prime_b) {
    Term ta = Term::letter(a);
    if (prime_a) ta = Term::rev(std::move(ta));
    Term tb = Term::letter(b);
    if (prime_b) tb = Term::rev(std::move(tb));
    return Term::rev(Term::mul(std::move(ta), std::move(tb)));
}

Term w_block(const std::string& u, const std::string& v, const std::string& s) {
    return Term::mul({rev_pair(u, false, v, false), Term::letter(s), rev_pair(u, false, v, true),
                      Term::letter(s), rev_pair(u, true, v, false), Term::letter(s),
                      rev_pair(u, true, v, true)});
}

}  // namespace

BuiltD build_d(const std::vector<std::pair<std::string, std::string>>& premises,
               std::optional<SigmaSequence> sigma, const std::string& fresh_prefix) {
    if (premises.empty()) throw std::invalid_argument("build_d requires at least one premise");
    int n = static_cast<int>(premises.size());
    BuiltD out;
    out.sigma = sigma ? std::move(*sigma) : canonical_sigma(n);
    if (!out.sigma.valid_for(n)) throw std::invalid_argument("invalid sigma sequence");
    for (int i = 1; i <= n; ++i)
        out.w.push_back(w_block(premises[i - 1].first, premises[i - 1].second, s_name(fresh_prefix, i)));
    std::vector<Term> factors;
    const auto& e = out.sigma.entries;
    for (std::size_t k = 0; k < e.size(); ++k) {
        factors.push_back(out.w[e[k] - 1]);
        if (k + 1 < e.size()) factors.push_back(Term::letter(t_name(fresh_prefix, e[k], e[k + 1])));
    }
    out.d = Term::mul(std::move(factors));
    return out;
}

namespace {

enum class Role { Absent, Source, Target };

struct Occurrence {
    Role role = Role::Absent;
    int index = 0;  // 1-based premise index when not absent
};

Occurrence find_occurrence(const std::vector<std::pair<std::string, std::string>>& premises,
                           const std::string& var) {
    for (int i = 0; i < static_cast<int>(premises.size()); ++i)
        if (premises[i].first == var) return {Role::Source, i + 1};
    for (int i = 0; i < static_cast<int>(premises.size()); ++i)
        if (premises[i].second == var) return {Role::Target, i + 1};
    return {};
}

}  // namespace

std::string compiled_case_name(CompiledCase c) {
    switch (c) {
        case CompiledCase::Tautology: return "TAUTOLOGY";
        case CompiledCase::AtomicComplete: return "ATOMIC_COMPLETE";
        case CompiledCase::AtomicReflexive: return "ATOMIC_REFLEXIVE";
        case CompiledCase::AtomicOneVertex: return "ATOMIC_ONEVERTEX";
        case CompiledCase::QiEquals: return "QIEQUALS";
        case CompiledCase::QiEquals2Source: return "QIEQUALS2_SOURCE";
        case CompiledCase::QiEquals2Target: return "QIEQUALS2_TARGET";
        case CompiledCase::Tau1: return "TAU_1";
        case CompiledCase::Tau2: return "TAU_2";
        case CompiledCase::Tau3: return "TAU_3";
        case CompiledCase::Tau4: return "TAU_4";
        case CompiledCase::Tau5: return "TAU_5";
        case CompiledCase::Tau6: return "TAU_6";
        case CompiledCase::Tau7: return "TAU_7";
        case CompiledCase::Tau8: return "TAU_8";
        case CompiledCase::Tau9: return "TAU_9";
    }
    return "?";
}

CompiledIdentity translate(const ReducedQuasiIdentity& r) {
    const auto& concl = r.conclusion;
    bool concl_eq = concl.kind == AtomicFormula::Kind::Equality;

    // Tautologies: u = u, or the conclusion adjacency literally among the premises.
    bool tautological = concl_eq && concl.left == concl.right;
    if (!concl_eq)
        for (const auto& [u, v] : r.premises)
            if (u == concl.left && v == concl.right) tautological = true;
    if (tautological)
        return {Identity{Term::letter("x"), Term::letter("x")}, CompiledCase::Tautology, {}};

    if (r.premises.empty()) {
        if (!concl_eq && concl.left == concl.right)
            return {parse_identity("xx'x", "x"), CompiledCase::AtomicReflexive, {}};
        if (!concl_eq)
            return {parse_identity("xx", "x"), CompiledCase::AtomicComplete, {}};
        return {parse_identity("x'", "x"), CompiledCase::AtomicOneVertex, {}};
    }

    // Fresh-name hygiene: the sentence's variables must never collide with
    // the s/t/z/w names introduced here.
    std::set<std::string> vars;
    for (const auto& [u, v] : r.premises) {
        vars.insert(u);
        vars.insert(v);
    }
    vars.insert(concl.left);
    vars.insert(concl.right);
    std::string prefix;
    auto clashes = [&](const std::string& base) {
        for (const auto& v : vars)
            if (v.rfind(base, 0) == 0) return true;
        return false;
    };
    while (clashes(prefix + "s") || clashes(prefix + "t") || vars.count(prefix + "z") ||
           vars.count(prefix + "w"))
        prefix = "f" + prefix;

    int n = static_cast<int>(r.premises.size());
    BuiltD built = build_d(r.premises, std::nullopt, prefix);
    std::vector<std::string> fresh;
    for (int i = 1; i <= n; ++i) fresh.push_back(s_name(prefix, i));
    {
        std::set<std::string> ts;
        const auto& e = built.sigma.entries;
        for (std::size_t k = 0; k + 1 < e.size(); ++k) ts.insert(t_name(prefix, e[k], e[k + 1]));
        fresh.insert(fresh.end(), ts.begin(), ts.end());
    }
    Term d = built.d;
    auto tvar = [&](int i, int j) { return Term::letter(t_name(prefix, i, j)); };
    auto letter = [](const std::string& x) { return Term::letter(x); };

    if (concl_eq) {
        std::string u = concl.left, v = concl.right;
        Occurrence ou = find_occurrence(r.premises, u);
        Occurrence ov = find_occurrence(r.premises, v);
        if (ou.role != Role::Absent && ov.role == Role::Absent) std::swap(u, v), std::swap(ou, ov);
        if (ou.role == Role::Absent) {
            // u D = u' D
            Identity id{Term::mul(letter(u), d), Term::mul(Term::rev(letter(u)), d)};
            return {std::move(id), CompiledCase::QiEquals, std::move(fresh)};
        }
        if (ou.role == Role::Source) {
            int i = ou.index;
            Identity id{Term::mul({letter(u), tvar(i, 1), d}), Term::mul({letter(v), tvar(i, 1), d})};
            return {std::move(id), CompiledCase::QiEquals2Source, std::move(fresh)};
        }
        int i = ou.index;
        Identity id{Term::mul({d, tvar(1, i), letter(u)}), Term::mul({d, tvar(1, i), letter(v)})};
        return {std::move(id), CompiledCase::QiEquals2Target, std::move(fresh)};
    }

    // Adjacency conclusion u ~ v: the nine-case table.  The left factor of
    // the identity realizes v, the right factor realizes u; each is a fresh
    // letter when the variable is absent from the premises.
    const std::string& u = concl.left;
    const std::string& v = concl.right;
    Occurrence ou = find_occurrence(r.premises, u);
    Occurrence ov = find_occurrence(r.premises, v);

    std::vector<Term> lhs;
    if (ov.role == Role::Absent) {
        fresh.push_back(prefix + "w");
        lhs.push_back(letter(prefix + "w"));
    } else if (ov.role == Role::Source) {
        lhs.push_back(letter(v));
        lhs.push_back(tvar(ov.index, 1));
    } else {
        int j = ov.index;
        lhs.push_back(rev_pair(r.premises[j - 1].first, false, r.premises[j - 1].second, false));
        lhs.push_back(tvar(j, 1));
    }
    lhs.push_back(d);
    if (ou.role == Role::Absent) {
        fresh.push_back(prefix + "z");
        lhs.push_back(letter(prefix + "z"));
    } else if (ou.role == Role::Source) {
        int i = ou.index;
        lhs.push_back(tvar(1, i));
        lhs.push_back(rev_pair(r.premises[i - 1].first, false, r.premises[i - 1].second, false));
    } else {
        lhs.push_back(tvar(1, ou.index));
        lhs.push_back(letter(u));
    }
    Term left = Term::mul(lhs);
    Identity id{left, Term::mul(left, left)};

    static constexpr CompiledCase table[3][3] = {
        // v: Absent            Source               Target
        {CompiledCase::Tau1, CompiledCase::Tau2, CompiledCase::Tau3},  // u absent
        {CompiledCase::Tau4, CompiledCase::Tau6, CompiledCase::Tau7},  // u source
        {CompiledCase::Tau5, CompiledCase::Tau8, CompiledCase::Tau9},  // u target
    };
    CompiledCase tag = table[static_cast<int>(ou.role)][static_cast<int>(ov.role)];
    return {std::move(id), tag, std::move(fresh)};
}

TranslationCheck verify_translation(const Graph& h, const ReducedQuasiIdentity& r, int jobs) {
    TranslationCheck out;
    out.graph_side = satisfies(h, UHSentence{as_quasi_identity(r)});
    auto compiled = translate(r);
    out.semigroup_side = check_identity(adjacency_semigroup(h).sem, compiled.identity, jobs).holds;
    return out;
}

}  // namespace adjsem

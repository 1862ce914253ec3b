#include "adjsem/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace adjsem {

UnarySemigroup direct_product(const UnarySemigroup& s, const UnarySemigroup& t) {
    int ns = s.order(), nt = t.order();
    int n = ns * nt;
    std::vector<int> mul(static_cast<std::size_t>(n) * n), inv(n);
    std::vector<std::string> labels(n);
    auto id = [&](int a, int b) { return a * nt + b; };
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < nt; ++b) {
            inv[id(a, b)] = id(s.inv(a), t.inv(b));
            labels[id(a, b)] = "(" + s.label(a) + "," + t.label(b) + ")";
            for (int c = 0; c < ns; ++c)
                for (int d = 0; d < nt; ++d)
                    mul[static_cast<std::size_t>(id(a, b)) * n + id(c, d)] = id(s.mul(a, c), t.mul(b, d));
        }
    std::optional<int> zero;
    if (s.zero() && t.zero()) zero = id(*s.zero(), *t.zero());
    return UnarySemigroup(n, std::move(mul), std::move(inv), zero, std::move(labels));
}

UnarySemigroup subalgebra_generated(const UnarySemigroup& s, const std::vector<int>& generators) {
    if (generators.empty()) throw std::invalid_argument("empty generating set");
    std::set<int> closed(generators.begin(), generators.end());
    for (int g : generators)
        if (g < 0 || g >= s.order()) throw std::out_of_range("generator out of range");
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> members(closed.begin(), closed.end());
        for (int a : members) {
            if (closed.insert(s.inv(a)).second) grew = true;
            for (int b : members)
                if (closed.insert(s.mul(a, b)).second) grew = true;
        }
    }
    std::vector<int> members(closed.begin(), closed.end());
    std::vector<int> new_index(s.order(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) new_index[members[i]] = static_cast<int>(i);
    int n = static_cast<int>(members.size());
    std::vector<int> mul(static_cast<std::size_t>(n) * n), inv(n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        inv[i] = new_index[s.inv(members[i])];
        labels[i] = s.label(members[i]);
        for (int j = 0; j < n; ++j)
            mul[static_cast<std::size_t>(i) * n + j] = new_index[s.mul(members[i], members[j])];
    }
    std::optional<int> zero;
    if (s.zero() && new_index[*s.zero()] >= 0) {
        // The ambient zero is a zero of the subalgebra too.
        zero = new_index[*s.zero()];
    }
    return UnarySemigroup(n, std::move(mul), std::move(inv), zero, std::move(labels));
}

bool is_ideal(const UnarySemigroup& s, const std::vector<int>& subset) {
    if (subset.empty()) return false;
    std::vector<bool> in(s.order(), false);
    for (int a : subset) {
        if (a < 0 || a >= s.order()) return false;
        in[a] = true;
    }
    for (int a : subset)
        for (int x = 0; x < s.order(); ++x)
            if (!in[s.mul(a, x)] || !in[s.mul(x, a)]) return false;
    return true;
}

bool is_reversion_closed(const UnarySemigroup& s, const std::vector<int>& subset) {
    std::vector<bool> in(s.order(), false);
    for (int a : subset) in[a] = true;
    for (int a : subset)
        if (!in[s.inv(a)]) return false;
    return true;
}

UnarySemigroup rees_quotient(const UnarySemigroup& s, const std::vector<int>& ideal) {
    if (!is_ideal(s, ideal)) throw std::invalid_argument("subset is not a two-sided ideal");
    if (!is_reversion_closed(s, ideal)) throw std::invalid_argument("ideal is not closed under reversion");
    std::vector<bool> in(s.order(), false);
    for (int a : ideal) in[a] = true;
    std::vector<int> survivors;
    for (int a = 0; a < s.order(); ++a)
        if (!in[a]) survivors.push_back(a);
    int n = static_cast<int>(survivors.size()) + 1;
    std::vector<int> new_index(s.order(), 0);  // ideal members map to the new zero
    for (std::size_t i = 0; i < survivors.size(); ++i) new_index[survivors[i]] = static_cast<int>(i) + 1;
    std::vector<int> mul(static_cast<std::size_t>(n) * n, 0), inv(n, 0);
    std::vector<std::string> labels(n);
    labels[0] = "0";
    for (int i = 1; i < n; ++i) {
        int a = survivors[i - 1];
        inv[i] = new_index[s.inv(a)];
        labels[i] = s.label(a);
        for (int j = 1; j < n; ++j) mul[static_cast<std::size_t>(i) * n + j] = new_index[s.mul(a, survivors[j - 1])];
    }
    return UnarySemigroup(n, std::move(mul), std::move(inv), 0, std::move(labels));
}

namespace {

// divides[a][b]: a lies in S^1 b S^1.
std::vector<std::vector<bool>> j_divisibility(const UnarySemigroup& s) {
    int n = s.order();
    std::vector<std::vector<bool>> div(n, std::vector<bool>(n, false));
    for (int b = 0; b < n; ++b) {
        // Closure of {b} under left/right multiplication by anything.
        std::vector<bool> reach(n, false);
        std::vector<int> stack{b};
        reach[b] = true;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int x = 0; x < n; ++x) {
                for (int c : {s.mul(x, a), s.mul(a, x)})
                    if (!reach[c]) {
                        reach[c] = true;
                        stack.push_back(c);
                    }
            }
        }
        for (int a = 0; a < n; ++a) div[a][b] = reach[a];
    }
    return div;
}

std::vector<int> classes_from(const std::vector<std::vector<bool>>& leq) {
    int n = static_cast<int>(leq.size());
    std::vector<int> cls(n);
    for (int a = 0; a < n; ++a) {
        int rep = a;
        for (int b = 0; b < a; ++b)
            if (leq[a][b] && leq[b][a]) {
                rep = cls[b];
                break;
            }
        cls[a] = rep;
    }
    return cls;
}

}  // namespace

GreensPartitions greens_partitions(const UnarySemigroup& s) {
    int n = s.order();
    std::vector<std::vector<bool>> leq_l(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> leq_r(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
        leq_l[a][a] = leq_r[a][a] = true;
    }
    for (int b = 0; b < n; ++b)
        for (int x = 0; x < n; ++x) {
            leq_l[s.mul(x, b)][b] = true;
            leq_r[s.mul(b, x)][b] = true;
        }
    GreensPartitions out;
    out.l_class = classes_from(leq_l);
    out.r_class = classes_from(leq_r);
    out.j_class = classes_from(j_divisibility(s));
    out.h_class.resize(n);
    for (int a = 0; a < n; ++a) {
        int rep = a;
        for (int b = 0; b < a; ++b)
            if (out.l_class[b] == out.l_class[a] && out.r_class[b] == out.r_class[a]) {
                rep = out.h_class[b];
                break;
            }
        out.h_class[a] = rep;
    }
    return out;
}

std::optional<std::vector<int>> unique_maximal_ideal(const UnarySemigroup& s) {
    auto div = j_divisibility(s);
    auto j = classes_from(div);
    // A J-class is maximal when no element outside it divides into it from above.
    std::vector<int> reps;
    for (int a = 0; a < s.order(); ++a)
        if (j[a] == a) reps.push_back(a);
    std::vector<int> maximal;
    for (int a : reps) {
        bool is_max = true;
        for (int b : reps)
            if (b != a && div[a][b]) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(a);
    }
    if (maximal.size() != 1) return std::nullopt;
    std::vector<int> ideal;
    for (int a = 0; a < s.order(); ++a)
        if (j[a] != maximal.front()) ideal.push_back(a);
    if (ideal.empty() || !is_ideal(s, ideal)) return std::nullopt;
    return ideal;
}

namespace {

struct ElementProfile {
    int index = 0, period = 0;  // of the cyclic subsemigroup <a>
    bool idempotent = false, inv_fixed = false, involutive = false, is_zero = false;
    auto operator<=>(const ElementProfile&) const = default;
};

// Structural zero, not the declared marker: the marker is presentation
// metadata and must not affect isomorphism.
ElementProfile profile(const UnarySemigroup& s, int a, std::optional<int> structural_zero) {
    ElementProfile p;
    std::vector<int> seen;
    int x = a;
    while (std::find(seen.begin(), seen.end(), x) == seen.end()) {
        seen.push_back(x);
        x = s.mul(x, a);
    }
    auto first = std::find(seen.begin(), seen.end(), x);
    p.index = static_cast<int>(first - seen.begin()) + 1;
    p.period = static_cast<int>(seen.end() - first);
    p.idempotent = s.is_idempotent(a);
    p.inv_fixed = s.inv(a) == a;
    p.involutive = s.inv(s.inv(a)) == a;
    p.is_zero = structural_zero && *structural_zero == a;
    return p;
}

struct IsoSearch {
    const UnarySemigroup& s;
    const UnarySemigroup& t;
    std::vector<ElementProfile> ps, pt;
    std::vector<int> map, used_by;  // used_by: t-element -> s-element or -1

    bool compatible(int a, int b) const { return ps[a] == pt[b]; }

    bool closed_check(int upto) const {
        // Full re-check on the mapped prefix; cheap at these orders.
        for (int a = 0; a <= upto; ++a)
            for (int b = 0; b <= upto; ++b) {
                int ab = s.mul(a, b);
                if (ab <= upto && t.mul(map[a], map[b]) != map[ab]) return false;
                if (ab > upto && used_by[t.mul(map[a], map[b])] >= 0 &&
                    used_by[t.mul(map[a], map[b])] != ab)
                    return false;
            }
        for (int a = 0; a <= upto; ++a) {
            int ia = s.inv(a);
            if (ia <= upto && t.inv(map[a]) != map[ia]) return false;
            if (ia > upto && used_by[t.inv(map[a])] >= 0 && used_by[t.inv(map[a])] != ia) return false;
        }
        return true;
    }

    bool search(int a) {
        if (a == s.order()) return true;
        for (int b = 0; b < t.order(); ++b) {
            if (used_by[b] >= 0 || !compatible(a, b)) continue;
            map[a] = b;
            used_by[b] = a;
            if (closed_check(a) && search(a + 1)) return true;
            map[a] = -1;
            used_by[b] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> isomorphism(const UnarySemigroup& s, const UnarySemigroup& t, int cap) {
    if (s.order() > cap || t.order() > cap)
        throw std::invalid_argument("isomorphism: order over cap");
    if (s.order() != t.order()) return std::nullopt;
    IsoSearch search{s, t, {}, {}, std::vector<int>(s.order(), -1), std::vector<int>(t.order(), -1)};
    auto zs = s.find_zero(), zt = t.find_zero();
    for (int a = 0; a < s.order(); ++a) search.ps.push_back(profile(s, a, zs));
    for (int b = 0; b < t.order(); ++b) search.pt.push_back(profile(t, b, zt));
    {
        auto sorted_s = search.ps;
        auto sorted_t = search.pt;
        std::sort(sorted_s.begin(), sorted_s.end());
        std::sort(sorted_t.begin(), sorted_t.end());
        if (sorted_s != sorted_t) return std::nullopt;
    }
    if (search.search(0)) return search.map;
    return std::nullopt;
}

}  // namespace adjsem

#include "adjsem/unary_semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace adjsem {

UnarySemigroup::UnarySemigroup(int order, std::vector<int> mul, std::vector<int> inv,
                               std::optional<int> zero, std::vector<std::string> labels)
    : order_(order), mul_(std::move(mul)), inv_(std::move(inv)), zero_(zero), labels_(std::move(labels)) {
    if (order_ < 1) throw std::invalid_argument("semigroup order must be >= 1");
    if (mul_.size() != static_cast<std::size_t>(order_) * order_)
        throw std::invalid_argument("mul table has wrong size");
    if (inv_.size() != static_cast<std::size_t>(order_))
        throw std::invalid_argument("inv table has wrong size");
    for (int v : mul_)
        if (v < 0 || v >= order_) throw std::invalid_argument("mul table entry out of range");
    for (int v : inv_)
        if (v < 0 || v >= order_) throw std::invalid_argument("inv table entry out of range");
    if (zero_) {
        for (int a = 0; a < order_; ++a)
            if (mul(*zero_, a) != *zero_ || mul(a, *zero_) != *zero_)
                throw std::invalid_argument("declared zero is not a two-sided zero");
    }
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(order_))
        throw std::invalid_argument("labels have wrong size");
}

std::string UnarySemigroup::label(int a) const {
    if (!labels_.empty()) return labels_[a];
    return std::to_string(a);
}

std::optional<std::array<int, 3>> UnarySemigroup::associativity_violation() const {
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return std::array<int, 3>{a, b, c};
    return std::nullopt;
}

bool UnarySemigroup::is_associative() const { return !associativity_violation(); }

std::optional<int> UnarySemigroup::find_zero() const {
    for (int z = 0; z < order_; ++z) {
        bool ok = true;
        for (int a = 0; a < order_ && ok; ++a)
            if (mul(z, a) != z || mul(a, z) != z) ok = false;
        if (ok) return z;
    }
    return std::nullopt;
}

bool UnarySemigroup::operator==(const UnarySemigroup& o) const {
    return order_ == o.order_ && mul_ == o.mul_ && inv_ == o.inv_;
}

namespace {

void compile_into(const Term& t, const std::vector<std::string>& letters, std::vector<int>& ops) {
    switch (t.kind()) {
        case Term::Kind::Letter: {
            auto it = std::lower_bound(letters.begin(), letters.end(), t.letter_name());
            if (it == letters.end() || *it != t.letter_name())
                throw std::logic_error("letter not in alphabet: " + t.letter_name());
            ops.push_back(static_cast<int>(it - letters.begin()));
            break;
        }
        case Term::Kind::Rev:
            compile_into(t.child(), letters, ops);
            ops.push_back(-2);
            break;
        case Term::Kind::Mul:
            compile_into(t.factors()[0], letters, ops);
            for (std::size_t i = 1; i < t.factors().size(); ++i) {
                compile_into(t.factors()[i], letters, ops);
                ops.push_back(-1);
            }
            break;
    }
}

}  // namespace

CompiledTerm compile_term(const Term& t, const std::vector<std::string>& letters) {
    CompiledTerm ct;
    compile_into(t, letters, ct.ops);
    int depth = 0;
    for (int op : ct.ops) {
        if (op >= 0) ++depth;
        else if (op == -1) --depth;
        ct.max_stack = std::max(ct.max_stack, depth);
    }
    return ct;
}

int eval_compiled(const CompiledTerm& ct, const UnarySemigroup& s, const std::vector<int>& values) {
    // Stack depth is bounded by max_stack; 64 covers every term in this
    // project by a wide margin.
    int stack[64];
    int top = -1;
    for (int op : ct.ops) {
        if (op >= 0) {
            stack[++top] = values[op];
        } else if (op == -2) {
            stack[top] = s.inv(stack[top]);
        } else {
            int b = stack[top--];
            stack[top] = s.mul(stack[top], b);
        }
    }
    return stack[0];
}

int evaluate(const Term& t, const UnarySemigroup& s, const std::map<std::string, int>& assignment) {
    switch (t.kind()) {
        case Term::Kind::Letter: {
            auto it = assignment.find(t.letter_name());
            if (it == assignment.end())
                throw std::invalid_argument("unassigned letter: " + t.letter_name());
            return it->second;
        }
        case Term::Kind::Rev:
            return s.inv(evaluate(t.child(), s, assignment));
        case Term::Kind::Mul: {
            int v = evaluate(t.factors()[0], s, assignment);
            for (std::size_t i = 1; i < t.factors().size(); ++i)
                v = s.mul(v, evaluate(t.factors()[i], s, assignment));
            return v;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

struct ScanResult {
    bool found = false;
    std::vector<int> witness;
    int lhs = -1, rhs = -1;
};

// Scans assignments whose first-slot value index is congruent to `residue`
// mod `stride`, in lexicographic order over `domain`; stops at the first
// failure, which is the lexicographically least one in that slice.
ScanResult scan_assignments(const UnarySemigroup& s, const CompiledTerm& lhs, const CompiledTerm& rhs,
                            const std::vector<int>& domain, std::size_t letter_count,
                            std::size_t residue, std::size_t stride) {
    ScanResult r;
    if (letter_count == 0) {
        if (residue != 0) return r;
        std::vector<int> values;
        int a = eval_compiled(lhs, s, values);
        int b = eval_compiled(rhs, s, values);
        if (a != b) r = {true, {}, a, b};
        return r;
    }
    std::vector<std::size_t> pos(letter_count, 0);
    std::vector<int> values(letter_count, 0);
    for (std::size_t first = residue; first < domain.size(); first += stride) {
        pos.assign(letter_count, 0);
        pos[0] = first;
        for (std::size_t i = 0; i < letter_count; ++i) values[i] = domain[pos[i]];
        while (true) {
            int a = eval_compiled(lhs, s, values);
            int b = eval_compiled(rhs, s, values);
            if (a != b) return {true, values, a, b};
            std::size_t i = letter_count;
            while (i > 1 && pos[i - 1] + 1 == domain.size()) {
                pos[--i] = 0;
                values[i] = domain[0];
            }
            if (i == 1) break;
            ++pos[i - 1];
            values[i - 1] = domain[pos[i - 1]];
        }
    }
    return r;
}

}  // namespace

IdentityCheck check_identity(const UnarySemigroup& s, const Identity& id, int jobs) {
    auto la = id.lhs.alphabet();
    auto ra = id.rhs.alphabet();
    std::vector<std::string> letters;
    std::merge(la.begin(), la.end(), ra.begin(), ra.end(), std::back_inserter(letters));
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

    CompiledTerm cl = compile_term(id.lhs, letters);
    CompiledTerm cr = compile_term(id.rhs, letters);

    // Zero-skipping is sound only when every letter occurs on both sides and
    // the zero is fixed by reversion: such assignments evaluate both sides
    // to the zero.
    std::vector<int> domain;
    auto z = s.zero();
    bool skip_zero = la == ra && z && s.inv(*z) == *z;
    for (int e = 0; e < s.order(); ++e)
        if (!skip_zero || e != *z) domain.push_back(e);

    IdentityCheck out;
    if (!letters.empty() && domain.empty()) return out;  // nothing to assign

    std::vector<int> best_witness;
    int best_lhs = -1, best_rhs = -1;
    bool found = false;
    if (jobs <= 1 || letters.empty() || domain.size() < 2) {
        auto r = scan_assignments(s, cl, cr, domain, letters.size(), 0, 1);
        if (r.found) {
            found = true;
            best_witness = r.witness;
            best_lhs = r.lhs;
            best_rhs = r.rhs;
        }
    } else {
        std::size_t stride = std::min<std::size_t>(jobs, domain.size());
        std::vector<ScanResult> results(stride);
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < stride; ++t)
            threads.emplace_back([&, t] {
                results[t] = scan_assignments(s, cl, cr, domain, letters.size(), t, stride);
            });
        for (auto& th : threads) th.join();
        // The sequential-first witness is the lexicographically least one.
        for (const auto& r : results) {
            if (!r.found) continue;
            if (!found || r.witness < best_witness) {
                found = true;
                best_witness = r.witness;
                best_lhs = r.lhs;
                best_rhs = r.rhs;
            }
        }
    }
    if (found) {
        out.holds = false;
        for (std::size_t i = 0; i < letters.size(); ++i) out.witness[letters[i]] = best_witness[i];
        out.lhs_value = best_lhs;
        out.rhs_value = best_rhs;
    }
    return out;
}

SetCheck check_identity_set(const UnarySemigroup& s, const NamedIdentitySet& set, int jobs) {
    SetCheck out;
    for (const auto& id : set.identities) {
        auto r = check_identity(s, id, jobs);
        out.holds = out.holds && r.holds;
        out.results.emplace_back(id, std::move(r));
    }
    return out;
}

UnarySemigroup parse_semigroup(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int order = -1;
    std::optional<int> zero;
    std::vector<int> mul, inv;
    enum class Section { Header, Mul, Inv } section = Section::Header;

    auto parse_ints = [&](const std::string& line) {
        std::istringstream ls(line);
        int v;
        std::vector<int> vs;
        while (ls >> v) vs.push_back(v);
        if (!ls.eof()) throw ParseError("expected integers", line_no);
        return vs;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        auto pos = raw.find('#');
        std::string line = pos == std::string::npos ? raw : raw.substr(0, pos);
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first)) continue;

        if (first == "order:") {
            if (!(probe >> order) || order < 1) throw ParseError("bad order", line_no);
        } else if (first == "zero:") {
            int z;
            if (!(probe >> z)) throw ParseError("bad zero", line_no);
            zero = z;
        } else if (first == "mul:") {
            if (order < 0) throw ParseError("'mul:' before 'order:'", line_no);
            section = Section::Mul;
        } else if (first == "inv:") {
            section = Section::Inv;
        } else if (section == Section::Mul) {
            auto vs = parse_ints(line);
            if (static_cast<int>(vs.size()) != order) throw ParseError("mul row has wrong length", line_no);
            mul.insert(mul.end(), vs.begin(), vs.end());
        } else if (section == Section::Inv) {
            auto vs = parse_ints(line);
            inv.insert(inv.end(), vs.begin(), vs.end());
        } else {
            throw ParseError("unexpected input", line_no);
        }
    }
    if (order < 0) throw ParseError("missing 'order:'", line_no);
    if (static_cast<int>(mul.size()) != order * order) throw ParseError("mul table incomplete", line_no);
    if (static_cast<int>(inv.size()) != order) throw ParseError("inv table incomplete", line_no);
    UnarySemigroup s(order, std::move(mul), std::move(inv), zero);
    // File input is untrusted: verify associativity now.
    if (auto v = s.associativity_violation()) {
        auto [a, b, c] = *v;
        throw ParseError("multiplication not associative at (" + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c) + ")");
    }
    return s;
}

std::string serialize_semigroup(const UnarySemigroup& s) {
    std::ostringstream out;
    out << "order: " << s.order() << '\n';
    if (s.zero()) out << "zero: " << *s.zero() << '\n';
    if (!s.labels().empty()) {
        for (int a = 0; a < s.order(); ++a) out << "# " << a << " = " << s.label(a) << '\n';
    }
    out << "mul:\n";
    for (int a = 0; a < s.order(); ++a) {
        for (int b = 0; b < s.order(); ++b) out << (b ? " " : "") << s.mul(a, b);
        out << '\n';
    }
    out << "inv:\n";
    for (int a = 0; a < s.order(); ++a) out << (a ? " " : "") << s.inv(a);
    out << '\n';
    return out.str();
}

}  // namespace adjsem

#include "adjsem/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace adjsem {

Term Term::letter(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty letter name");
    Term t;
    t.kind_ = Kind::Letter;
    t.name_ = std::move(name);
    return t;
}

Term Term::mul(std::vector<Term> factors) {
    std::vector<Term> flat;
    for (auto& f : factors) {
        if (f.kind_ == Kind::Mul)
            for (auto& g : f.children_) flat.push_back(std::move(g));
        else
            flat.push_back(std::move(f));
    }
    if (flat.empty()) throw std::invalid_argument("empty product");
    if (flat.size() == 1) return std::move(flat.front());
    Term t;
    t.kind_ = Kind::Mul;
    t.children_ = std::move(flat);
    return t;
}

Term Term::mul(Term a, Term b) {
    std::vector<Term> fs;
    fs.push_back(std::move(a));
    fs.push_back(std::move(b));
    return mul(std::move(fs));
}

Term Term::rev(Term t) {
    Term r;
    r.kind_ = Kind::Rev;
    r.children_.push_back(std::move(t));
    return r;
}

const std::string& Term::letter_name() const {
    if (kind_ != Kind::Letter) throw std::logic_error("not a letter");
    return name_;
}

const std::vector<Term>& Term::factors() const {
    if (kind_ != Kind::Mul) throw std::logic_error("not a product");
    return children_;
}

const Term& Term::child() const {
    if (kind_ != Kind::Rev) throw std::logic_error("not a reversion");
    return children_.front();
}

int Term::node_count() const {
    int n = 1;
    for (const auto& c : children_) n += c.node_count();
    return n;
}

namespace {

void collect_letters(const Term& t, std::vector<std::string>& out) {
    if (t.kind() == Term::Kind::Letter) {
        out.push_back(t.letter_name());
    } else if (t.kind() == Term::Kind::Rev) {
        collect_letters(t.child(), out);
    } else {
        for (const auto& f : t.factors()) collect_letters(f, out);
    }
}

}  // namespace

std::vector<std::string> Term::alphabet() const {
    std::vector<std::string> out;
    collect_letters(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Term::operator==(const Term& other) const {
    return kind_ == other.kind_ && name_ == other.name_ && children_ == other.children_;
}

namespace {

struct TermParser {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos + 1));
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    Term parse_term() {
        std::vector<Term> factors;
        factors.push_back(parse_factor());
        while (true) {
            skip_ws();
            if (pos >= text.size() || text[pos] == ')') break;
            factors.push_back(parse_factor());
        }
        return Term::mul(std::move(factors));
    }

    Term parse_factor() {
        Term t = parse_atom();
        while (peek('\'')) {
            ++pos;
            t = Term::rev(std::move(t));
        }
        return t;
    }

    Term parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] == '(') {
            ++pos;
            Term t = parse_term();
            if (!peek(')')) fail("expected ')'");
            ++pos;
            return t;
        }
        if (text[pos] >= 'a' && text[pos] <= 'z') {
            std::size_t start = pos++;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            return Term::letter(text.substr(start, pos - start));
        }
        fail("expected letter or '('");
    }
};

}  // namespace

Term parse_term(const std::string& text) {
    TermParser p{text};
    p.skip_ws();
    if (p.pos >= text.size()) throw ParseError("empty term");
    Term t = p.parse_term();
    p.skip_ws();
    if (p.pos < text.size()) p.fail("trailing input");
    return t;
}

std::string print_term(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Letter:
            return t.letter_name();
        case Term::Kind::Rev: {
            const Term& c = t.child();
            if (c.kind() == Term::Kind::Mul) return "(" + print_term(c) + ")'";
            return print_term(c) + "'";
        }
        case Term::Kind::Mul: {
            std::string out;
            for (const auto& f : t.factors()) out += print_term(f);
            return out;
        }
    }
    return {};
}

Identity parse_identity(const std::string& lhs, const std::string& rhs) {
    return {parse_term(lhs), parse_term(rhs)};
}

std::string print_identity(const Identity& id) {
    return print_term(id.lhs) + " = " + print_term(id.rhs);
}

}  // namespace adjsem

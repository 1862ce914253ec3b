#include "adjsem/normal_form.hpp"

#include <stdexcept>
#include <vector>

namespace adjsem {

namespace {

struct FlatLetter {
    std::string name;
    bool primed = false;
};

FlatLetter toggled(FlatLetter l) {
    l.primed = !l.primed;  // x -> x', x' -> x'' = x
    return l;
}

using FlatWord = std::vector<FlatLetter>;

// Alternating word u1 (v1)' u2 (v2)' ... un (vn)' u(n+1): flats has one more
// entry than revs, flats may be empty, every revs entry has length >= 2.
struct NWord {
    std::vector<FlatWord> flats{FlatWord{}};
    std::vector<FlatWord> revs;

    int breadth() const { return static_cast<int>(revs.size()); }
    bool empty_word() const { return revs.empty() && flats.front().empty(); }
};

NWord single(FlatLetter l) {
    NWord w;
    w.flats.front().push_back(std::move(l));
    return w;
}

NWord concat(NWord a, const NWord& b) {
    FlatWord joined = std::move(a.flats.back());
    joined.insert(joined.end(), b.flats.front().begin(), b.flats.front().end());
    a.flats.back() = std::move(joined);
    a.flats.insert(a.flats.end(), b.flats.begin() + 1, b.flats.end());
    a.revs.insert(a.revs.end(), b.revs.begin(), b.revs.end());
    return a;
}

NWord flat_word(FlatWord w) {
    NWord out;
    out.flats.front() = std::move(w);
    return out;
}

NWord reversed_block(FlatWord v) {
    NWord out;
    out.flats.push_back({});
    out.revs.push_back(std::move(v));
    return out;
}

// s' for s in N, by induction on breadth.
NWord dash(const NWord& s) {
    if (s.breadth() == 0) {
        const FlatWord& w = s.flats.front();
        if (w.empty()) throw std::logic_error("dash of empty word");
        if (w.size() == 1) return single(toggled(w.front()));
        return reversed_block(w);
    }
    // s = p (y1 ... ym)' u with p of one smaller breadth (possibly empty).
    NWord p;
    p.flats.assign(s.flats.begin(), s.flats.end() - 1);
    p.revs.assign(s.revs.begin(), s.revs.end() - 1);
    const FlatWord& v = s.revs.back();
    const FlatWord& u = s.flats.back();
    FlatWord middle(v.begin() + 1, v.end() - 1);  // y2 ... y(m-1)

    if (p.empty_word() && u.empty()) {
        // ((y1...ym)')' collapses to the flat word itself.
        return flat_word(v);
    }
    if (p.empty_word()) {
        // ((y1 w ym)' u)' = (y1' u)' w ym   (second associativity law)
        FlatWord block{toggled(v.front())};
        block.insert(block.end(), u.begin(), u.end());
        FlatWord tail = middle;
        tail.push_back(v.back());
        return concat(reversed_block(std::move(block)), flat_word(std::move(tail)));
    }
    NWord p_ym = p;
    p_ym.flats.back().push_back(toggled(v.back()));
    if (u.empty()) {
        // (p (y1 w ym)')' = y1 w (p ym')'   (first associativity law)
        FlatWord head{v.front()};
        head.insert(head.end(), middle.begin(), middle.end());
        return concat(flat_word(std::move(head)), dash(p_ym));
    }
    // Both nonempty: (p (y1 w ym)' u)' = (y1' u)' w (p ym')'.
    FlatWord block{toggled(v.front())};
    block.insert(block.end(), u.begin(), u.end());
    NWord out = concat(reversed_block(std::move(block)), flat_word(middle));
    return concat(std::move(out), dash(p_ym));
}

NWord to_nword(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Letter:
            return single({t.letter_name(), false});
        case Term::Kind::Rev:
            return dash(to_nword(t.child()));
        case Term::Kind::Mul: {
            NWord acc = to_nword(t.factors()[0]);
            for (std::size_t i = 1; i < t.factors().size(); ++i)
                acc = concat(std::move(acc), to_nword(t.factors()[i]));
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

Term letter_term(const FlatLetter& l) {
    Term t = Term::letter(l.name);
    return l.primed ? Term::rev(std::move(t)) : std::move(t);
}

Term to_term(const NWord& w) {
    std::vector<Term> factors;
    for (std::size_t i = 0; i < w.flats.size(); ++i) {
        for (const auto& l : w.flats[i]) factors.push_back(letter_term(l));
        if (i < w.revs.size()) {
            std::vector<Term> block;
            for (const auto& l : w.revs[i]) block.push_back(letter_term(l));
            factors.push_back(Term::rev(Term::mul(std::move(block))));
        }
    }
    return Term::mul(std::move(factors));
}

}  // namespace

Term normalize(const Term& t) { return to_term(to_nword(t)); }

Term normalize_ref(const Term& t) {
    NWord w = to_nword(t);
    // Split oversized reversed blocks until all have length exactly 2; each
    // split shortens the block by one on both sides.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.revs.size(); ++i) {
            const FlatWord v = w.revs[i];
            if (v.size() <= 2) continue;
            // (y1 w ym)' = (w ym)' w (y1 w)' with w = y2..y(m-1).
            FlatWord middle(v.begin() + 1, v.end() - 1);
            FlatWord right_block = middle;
            right_block.push_back(v.back());
            FlatWord left_block{v.front()};
            left_block.insert(left_block.end(), middle.begin(), middle.end());
            w.revs[i] = std::move(right_block);
            w.revs.insert(w.revs.begin() + i + 1, std::move(left_block));
            w.flats.insert(w.flats.begin() + i + 1, std::move(middle));
            changed = true;
            break;
        }
    }
    return to_term(w);
}

namespace {

bool is_flat_letter(const Term& t) {
    return t.kind() == Term::Kind::Letter ||
           (t.kind() == Term::Kind::Rev && t.child().kind() == Term::Kind::Letter);
}

}  // namespace

NfShape normal_form_shape(const Term& t) {
    NfShape shape;
    std::vector<const Term*> factors;
    if (t.kind() == Term::Kind::Mul)
        for (const auto& f : t.factors()) factors.push_back(&f);
    else
        factors.push_back(&t);

    shape.in_n = true;
    shape.refined = true;
    for (const Term* f : factors) {
        if (is_flat_letter(*f)) continue;
        if (f->kind() == Term::Kind::Rev) {
            const Term& c = f->child();
            if (c.kind() == Term::Kind::Rev) {
                shape = {false, 0, false, "doubly reversed factor " + print_term(*f)};
                return shape;
            }
            // c is a product; every factor must be a flat letter.
            bool flat = true;
            for (const auto& g : c.factors())
                if (!is_flat_letter(g)) flat = false;
            if (!flat) {
                shape = {false, 0, false, "nested reversion in " + print_term(*f)};
                return shape;
            }
            ++shape.breadth;
            if (c.factors().size() > 2) shape.refined = false;
        } else {
            shape = {false, 0, false, "factor " + print_term(*f) + " is not flat or reversed-flat"};
            return shape;
        }
    }
    return shape;
}

}  // namespace adjsem

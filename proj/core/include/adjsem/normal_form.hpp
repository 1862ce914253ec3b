#pragma once

#include <string>

#include "adjsem/term.hpp"

namespace adjsem {

/// Shape report for the breadth normal form N: alternating possibly-empty
/// flat blocks over X u X' and reversed flat blocks of length >= 2.
/// `refined` additionally bounds reversed blocks to length <= 2.
struct NfShape {
    bool in_n = false;
    int breadth = 0;
    bool refined = false;
    std::string reason;  // set when !in_n
};

NfShape normal_form_shape(const Term& t);

/// Rewrites to a word in N with the same plain pattern graph, by the
/// structural recursion on products and reversions (breadth induction for
/// the reversion case).  x'' collapses only where that recursion produces it.
Term normalize(const Term& t);

/// Rewrites to a word in N whose reversed blocks have length exactly 2,
/// preserving the reflexive pattern graph: after normalize, blocks of
/// length m > 2 split by (xyz)' = (yz)'y(xy)' with x the first letter,
/// y the middle word and z the last letter.
Term normalize_ref(const Term& t);

}  // namespace adjsem

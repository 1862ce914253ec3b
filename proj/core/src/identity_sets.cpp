#include "adjsem/identity_sets.hpp"

namespace adjsem {

namespace {

Identity id(const char* lhs, const char* rhs) { return parse_identity(lhs, rhs); }

}  // namespace

Identity faar_law() { return id("x(yz)'", "(y(xz')')'"); }
Identity saar_law() { return id("(xy)'z", "((x'z)'y)'"); }

const NamedIdentitySet& psi_laws() {
    static const NamedIdentitySet set{"PSI", {id("x''", "x"), faar_law(), saar_law()}};
    return set;
}

const NamedIdentitySet& sigma_ref_laws() {
    static const NamedIdentitySet set{"SIGMA_REF", [] {
                                          auto ids = psi_laws().identities;
                                          ids.push_back(id("xx'x", "x"));
                                          ids.push_back(id("(xx')'", "xx'"));
                                          ids.push_back(id("xxx", "xx"));
                                          ids.push_back(id("xyxzx", "xzxyxzx"));
                                          ids.push_back(id("xzxyxzx", "xzxyx"));
                                          ids.push_back(id("x'yxzx", "(xzx)'yxzx"));
                                          ids.push_back(id("xyxzx'", "xyxz(xyx)'"));
                                          return ids;
                                      }()};
    return set;
}

const NamedIdentitySet& eq_simple_laws() {
    static const NamedIdentitySet set{
        "EQ_SIMPLE",
        {id("xx'x", "x"), id("x''", "x"), id("(x'x)'", "x'x"), id("(xy)'", "y'(x'xyy')'x'")}};
    return set;
}

const NamedIdentitySet& square_band_laws() {
    static const NamedIdentitySet set{"SQUARE_BAND", {id("xx", "x"), id("xyz", "xz")}};
    return set;
}

const NamedIdentitySet& involution_laws() {
    static const NamedIdentitySet set{"INVOLUTION", {id("x''", "x"), id("(xy)'", "y'x'")}};
    return set;
}

const NamedIdentitySet& regular_laws() {
    static const NamedIdentitySet set{"REGULAR", {id("xx'x", "x")}};
    return set;
}

std::optional<NamedIdentitySet> named_identity_set(const std::string& name) {
    if (name == "PSI") return psi_laws();
    if (name == "SIGMA_REF") return sigma_ref_laws();
    if (name == "EQ_SIMPLE") return eq_simple_laws();
    if (name == "SQUARE_BAND") return square_band_laws();
    if (name == "INVOLUTION") return involution_laws();
    if (name == "REGULAR") return regular_laws();
    return std::nullopt;
}

}  // namespace adjsem

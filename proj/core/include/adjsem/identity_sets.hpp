#pragma once

#include <optional>
#include <string>

#include "adjsem/unary_semigroup.hpp"

namespace adjsem {

// The named identity systems.  PSI is the three-law system
// {x'' = x, x(yz)' = (y(xz')')', (xy)'z = ((x'z)'y)'}; the latter two are
// the first/second associativity-across-reversion laws.

const NamedIdentitySet& psi_laws();
const NamedIdentitySet& sigma_ref_laws();
const NamedIdentitySet& eq_simple_laws();
const NamedIdentitySet& square_band_laws();
const NamedIdentitySet& involution_laws();
const NamedIdentitySet& regular_laws();

/// Lookup by name: PSI, SIGMA_REF, EQ_SIMPLE, SQUARE_BAND, INVOLUTION, REGULAR.
std::optional<NamedIdentitySet> named_identity_set(const std::string& name);

Identity faar_law();  // x(yz)' = (y(xz')')'
Identity saar_law();  // (xy)'z = ((x'z)'y)'

}  // namespace adjsem

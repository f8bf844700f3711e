#pragma once

#include <string>

#include "qfca/concept.hpp"

namespace qfca {

std::string report_json(const Report& r);

// Concepts grouped per type with the Hasse covers of the underlying order.
std::string lattice_json(const ConceptLattice& L, const std::string& name);
// One digraph per type; edges run from lower to upper cover.
std::string lattice_dot(const ConceptLattice& L, const std::string& name);

std::string abar_json(const AbarCategory& abar, const QDistributor& phi_tr,
                      const std::string& name);

}  // namespace qfca

#pragma once

#include <string>
#include <vector>

#include "kmb/rootdata.hpp"

namespace kmb {

// Built-in root data in the simply-connected presentation (coroots are
// coordinate covectors, roots are the Cartan rows). The Kac-Moody example
// carries one extra lattice dimension so the roots stay independent.
// Known names: A1, A2, B2, G2, A3, A1xA1, affineA1.
RootDatum standard_datum(const std::string& name);

std::vector<std::string> standard_datum_names();

// Non-trivial diagram automorphisms of the datum, possibly empty.
std::vector<IntMat> standard_automorphism_matrices(const std::string& name);

}  // namespace kmb

#pragma once

#include "pi1/root_datum.hpp"

#include <string>
#include <vector>

namespace pi1 {

// Cartan matrix with the convention C(i, j) = <alpha_j, alpha_i^vee>,
// Bourbaki numbering. Types: A (l >= 1), B, C (l >= 1), D (l >= 2),
// E (l in 6..8), F (l = 4), G (l = 2).
IntMatrix cartan_matrix_of_type(char type, int rank);

// Simply connected datum: X^vee has the simple coroots as its basis.
RootDatum simply_connected_datum(char type, int rank);
// Adjoint datum: X has the simple roots as its basis.
RootDatum adjoint_datum(char type, int rank);

// Generic closure construction: given index-paired simple roots and coroots
// in some ambient Z^n with the standard pairing, generate the full root
// system by reflections.
std::pair<std::vector<IntVec>, std::vector<IntVec>> close_root_system(
    const std::vector<IntVec>& simple_roots, const std::vector<IntVec>& simple_coroots);

// Catalog lookup. Accepted specs (nesting allowed):
//   Torus(r), GL(n), SL(n), PGL(n), Sp(2n), SO(n), Spin(n),
//   SC(T,l), ADJ(T,l), Product(spec, spec, ...),
//   CentralQuotient(spec, [a/b, ...]; [c/d, ...])
RootDatum standard_group(const std::string& spec);

std::vector<std::string> catalog_names();

}  // namespace pi1

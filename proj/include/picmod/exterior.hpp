#pragma once

// The wedge-with-theta map on the third exterior power of a symplectic
// lattice. V = Z^{2g} with symplectic basis a_1..a_g, b_1..b_g (ordered
// a_1,...,a_g,b_1,...,b_g) and theta = sum_i a_i ^ b_i.

#include "picmod/int_matrix.hpp"

#include <cstddef>

namespace picmod {

// Relation matrix presenting Lambda^3 V / (theta ^ V): one row per basis
// vector e_j of V, holding the coordinates of theta ^ e_j in the
// lexicographic basis of Lambda^3 V. Shape 2g x C(2g,3), so
// cokernel(theta_wedge_matrix(g)) is the quotient itself.
IntMatrix theta_wedge_matrix(unsigned g);

// Rank of the 3-element subset {p < q < r} of {0,...,n-1} in lexicographic
// order. Exposed for tests.
std::size_t lex_triple_index(unsigned p, unsigned q, unsigned r, unsigned n);

} // namespace picmod

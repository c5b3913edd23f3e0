#pragma once

// The specific presentations this project computes with: the Artin
// presentation of the braid group B_n and the Birman-Hilden presentation of
// the symmetric mapping class group of a numerically admissible cyclic cover.

#include "picmod/presentations.hpp"

namespace picmod {

// B_n: generators s_1..s_{n-1}; relators s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
// for 1 <= i <= n-2 and s_i s_j = s_j s_i for |i-j| > 1. n >= 2.
FinitePresentation artin_braid_presentation(unsigned n);

// The central element (s_1 ... s_{n-1})^n, the Dehn twist about the boundary
// of the n-marked disk. Length n(n-1). n >= 2.
Word braid_center_word(unsigned n);

// Symmetric mapping class group of a degree-d cyclic cover of the sphere
// branched over n points, for numerically admissible covers. Generators
// t_1..t_{n-1}; relators: the two braid families, the hyperelliptic-style
// relation (t_1...t_{n-1}t_{n-1}...t_1)^d, the boundary relation
// (t_1...t_{n-1})^n, and the commutator [t_1...t_{n-1}, t_1].
// n >= 3, d >= 2.
FinitePresentation birman_hilden_presentation(unsigned n, unsigned d);

} // namespace picmod

#pragma once

// Closed-form values of the quantitative theorems this project reproduces.
// Each oracle is an independent route against which the presentation+SNF
// pipeline is cross-checked; see docs/citations.md for the statements.

#include "picmod/fg_abelian_group.hpp"

namespace picmod::oracles {

// Picard group of the hyperelliptic locus: Z/(4g+2) for g even, Z/(8g+4)
// for g odd. g >= 2.
FgAbelianGroup hyperelliptic_pic(unsigned g);

// Order of H_1 of the symmetric mapping class group of a numerically
// admissible degree-d cyclic cover branched over n points: (n-1)*gcd(n,2d).
// n >= 3, d >= 2.
Integer admissible_h1_order(unsigned n, unsigned d);

// H_1 of the liftable mapping class group of a balanced superelliptic cover
// branched over 2n+2 points. n >= 2.
FgAbelianGroup balanced_superelliptic_h1(unsigned n);

// H_1(Sp_g(Z)[m]) for g >= 2, m >= 3: (Z/m)^{g(2g+1)} for m odd,
// (Z/m)^{g(2g-1)} x (Z/2m)^{2g} for m even.
FgAbelianGroup sp_level_h1(unsigned g, unsigned m);

// Lambda^3_0 V_m = Lambda^3 V_m / (theta ^ V_m), computed by reducing the
// integral cokernel of the wedge-with-theta map mod m. g >= 3, m >= 2.
FgAbelianGroup lambda3_0(unsigned g, unsigned m);

// Torsion of the Picard group of the level-m moduli of genus-g curves of
// compact type: lambda3_0(g,m) + sp_level_h1(g,m). g >= 3, m >= 3.
FgAbelianGroup pic_mgc_torsion(unsigned g, unsigned m);

// |Sp_{2g}(F_2)| = 2^{g^2} * prod_{k=1}^{g} (2^{2k} - 1). g >= 1.
Integer sp2_order(unsigned g);

// Number of components of the level-m hyperelliptic locus: 1 for m odd,
// |Sp_{2g}(F_2)| / (2g+2)! for m even. g >= 2, m >= 1.
Integer hyperelliptic_level_components(unsigned g, unsigned m);

// Abelianization of the image of the hyperelliptic mapping class group in
// Sp_g(Z): Z/2 for g even, Z/4 for g odd. g >= 2.
FgAbelianGroup gg_abelianization(unsigned g);

// Picard group of the locus of hyperelliptic curves of compact type:
// Z^{floor(g/2)} x (Z/2 for g even, Z/4 for g odd). g >= 2.
FgAbelianGroup pic_hyp_compact_type(unsigned g);

// H_1 of the level-2 hyperelliptic mapping class group:
// Z^{g(2g+1)-1} x Z/2. g >= 2.
FgAbelianGroup delta_g_level2_h1(unsigned g);

// H_1 of the pure mapping class group of the n-marked sphere: Z^{n(n-3)/2}.
// n >= 4.
FgAbelianGroup pmod_sphere_h1(unsigned n);

// dim_Q H^j(B_n, Q): 1 for j in {0,1}, 0 for j >= 2. n >= 2.
unsigned arnold_braid_cohomology(unsigned n, unsigned j);

} // namespace picmod::oracles

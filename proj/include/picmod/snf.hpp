#pragma once

// Smith normal form over Z and the cokernel construction that turns a
// relation matrix into a finitely generated abelian group.

#include "picmod/fg_abelian_group.hpp"
#include "picmod/int_matrix.hpp"

#include <vector>

namespace picmod {

// U * M * V = S with U, V unimodular, S diagonal, diagonal entries
// non-negative and forming a divisibility chain among the nonzero ones.
struct SnfResult {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;

    std::vector<Integer> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

// Z^cols / rowspace(M): rows are relations, columns are generators.
FgAbelianGroup cokernel(const IntMatrix& m);

} // namespace picmod

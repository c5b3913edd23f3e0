#include "picmod/snf.hpp"

#include <algorithm>
#include <cstddef>

namespace picmod {

namespace {

// Smallest nonzero |entry| in the trailing block S[t.., t..].
bool find_min_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < s.rows(); ++i) {
        for (std::size_t j = t; j < s.cols(); ++j) {
            const Integer& v = s.at(i, j);
            if (v == 0) continue;
            Integer a = abs(v);
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

bool cross_clear(const IntMatrix& s, std::size_t t) {
    for (std::size_t i = t + 1; i < s.rows(); ++i)
        if (s.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < s.cols(); ++j)
        if (s.at(t, j) != 0) return false;
    return true;
}

} // namespace

std::vector<Integer> SnfResult::diagonal() const {
    std::size_t n = std::min(S.rows(), S.cols());
    std::vector<Integer> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(S.at(i, i));
    return d;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    SnfResult res{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix& s = res.S;
    IntMatrix& u = res.U;
    IntMatrix& v = res.V;

    const std::size_t nmin = std::min(r, c);
    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pi, pj;
        if (!find_min_pivot(s, t, pi, pj)) break; // trailing block is zero

        for (;;) {
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // One reduction pass; leftover entries are remainders, strictly
            // smaller than the pivot, and become the next pivot.
            for (std::size_t i = t + 1; i < r; ++i) {
                if (s.at(i, t) == 0) continue;
                Integer q = s.at(i, t) / s.at(t, t); // truncated
                if (q != 0) {
                    q = -q;
                    s.add_row_multiple(i, t, q);
                    u.add_row_multiple(i, t, q);
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (s.at(t, j) == 0) continue;
                Integer q = s.at(t, j) / s.at(t, t);
                if (q != 0) {
                    q = -q;
                    s.add_col_multiple(j, t, q);
                    v.add_col_multiple(j, t, q);
                }
            }

            if (!cross_clear(s, t)) {
                find_min_pivot(s, t, pi, pj);
                continue;
            }

            // Pivot must divide the whole trailing block for the chain to
            // hold; pull in an offending row and keep reducing otherwise.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < r && divides_all; ++i) {
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (!mpz_divisible_p(s.at(i, j).get_mpz_t(), s.at(t, t).get_mpz_t())) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) break;
            find_min_pivot(s, t, pi, pj);
        }

        if (s.at(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

FgAbelianGroup cokernel(const IntMatrix& m) {
    SnfResult snf = smith_normal_form(m);
    std::vector<Integer> diag = snf.diagonal();
    std::size_t nonzero = 0;
    std::vector<Integer> torsion;
    for (Integer& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) torsion.push_back(std::move(d));
    }
    // zero invariant factors contribute free rank, never torsion
    return FgAbelianGroup(m.cols() - nonzero, std::move(torsion));
}

} // namespace picmod

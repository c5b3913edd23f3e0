#include "picmod/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace picmod {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DomainError("IntMatrix: entry count does not match rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DomainError("IntMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += k * at(r, j);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << "]\n";
    }
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix product: inner dimensions differ");
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p.at(i, j) += aik * b.at(k, j);
        }
    return p;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // exact by the Bareiss identity
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

} // namespace picmod

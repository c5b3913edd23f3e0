#pragma once

// Dense matrices of arbitrary-precision integers, row-major.
// Carrier for relation matrices and exterior-power maps; sizes in this
// problem domain stay small (at most a few hundred rows), so no sparse
// storage is provided.

#include "picmod/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace picmod {

class IntMatrix {
public:
    IntMatrix() = default; // 0x0
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMatrix identity(std::size_t n);
    // Convenience for literals in tests and small fixtures.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Integer& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Integer& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    // row i += k * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Integer& k);
    // col i += k * col j
    void add_col_multiple(std::size_t i, std::size_t j, const Integer& k);

    IntMatrix transposed() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Exact determinant (Bareiss fraction-free elimination). Square input only.
Integer determinant(const IntMatrix& m);

} // namespace picmod

#ifndef HYPEREXT_LINALG_HPP
#define HYPEREXT_LINALG_HPP

#include <optional>
#include <vector>

#include "hyperext/field.hpp"

namespace hyperext {

/// Row-major dense matrix over F_p.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Coeff& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Coeff at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static DenseMatrix identity(std::size_t n);
    DenseMatrix multiply(const DenseMatrix& rhs, const PrimeField& F) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Coeff> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(DenseMatrix& m, const PrimeField& F);
std::size_t rank(DenseMatrix m, const PrimeField& F);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Coeff>> nullspace(DenseMatrix m, const PrimeField& F);
std::optional<DenseMatrix> inverse(const DenseMatrix& m, const PrimeField& F);

}  // namespace hyperext

#endif

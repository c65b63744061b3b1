#include "hyperext/linalg.hpp"

#include <stdexcept>

namespace hyperext {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs, const PrimeField& F) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shapes do not compose");
    DenseMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Coeff a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) = F.add(out.at(i, j), F.mul(a, rhs.at(k, j)));
        }
    return out;
}

std::vector<std::size_t> row_reduce(DenseMatrix& m, const PrimeField& F) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::uint64_t p = F.prime();
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Coeff inv = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            std::uint64_t factor = p - m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m.at(r, j) == 0) continue;
                m.at(i, j) = static_cast<Coeff>((m.at(i, j) + factor * m.at(r, j)) % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(DenseMatrix m, const PrimeField& F) { return row_reduce(m, F).size(); }

std::vector<std::vector<Coeff>> nullspace(DenseMatrix m, const PrimeField& F) {
    auto pivots = row_reduce(m, F);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Coeff>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Coeff> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m, const PrimeField& F) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    DenseMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = row_reduce(aug, F);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

}  // namespace hyperext

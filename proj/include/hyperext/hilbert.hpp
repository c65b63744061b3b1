#ifndef HYPEREXT_HILBERT_HPP
#define HYPEREXT_HILBERT_HPP

#include <cstdint>
#include <vector>

#include "hyperext/monomial.hpp"

namespace hyperext {

/// Hilbert series N(t) / (1 - t)^n of Q / (monomials), Q in n variables.
class MonomialQuotientSeries {
public:
    MonomialQuotientSeries(std::vector<Monomial> generators, int nvars);

    const std::vector<std::int64_t>& numerator() const noexcept { return numerator_; }
    /// dim_k of the degree-d piece (0 for d < 0).
    std::int64_t value(int d) const;
    /// Krull dimension; -1 for the zero quotient.
    int dimension() const noexcept { return dimension_; }
    /// Sum of all values when dimension <= 0.
    std::int64_t total() const noexcept { return total_; }

private:
    std::vector<std::int64_t> numerator_;
    int nvars_;
    int dimension_;
    std::int64_t total_ = 0;
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace hyperext

#endif

#ifndef HYPEREXT_FREE_MAP_HPP
#define HYPEREXT_FREE_MAP_HPP

#include <span>
#include <vector>

#include "hyperext/module_element.hpp"
#include "hyperext/polynomial.hpp"
#include "hyperext/ring.hpp"

namespace hyperext {

/// Homogeneous matrix between graded free modules
///   sum_j A(-source_degrees[j]) -> sum_i A(-target_degrees[i]),
/// A the ring of `ring()`. Entry (i, j) is zero or homogeneous of degree
/// source_degrees[j] - target_degrees[i]. Over a hypersurface entries are
/// stored reduced modulo f, so equality is equality in R.
class GradedFreeMap {
public:
    /// `entries` is row-major, rows = target rank. Throws std::invalid_argument
    /// on a shape mismatch or an entry of the wrong degree.
    GradedFreeMap(RingPtr ring, std::vector<int> target_degrees, std::vector<int> source_degrees,
                  std::vector<Polynomial> entries);

    static GradedFreeMap zero(RingPtr ring, std::vector<int> target_degrees, std::vector<int> source_degrees);
    static GradedFreeMap identity(RingPtr ring, std::vector<int> degrees);
    /// Columns given as module elements of the target free module.
    static GradedFreeMap from_columns(RingPtr ring, std::vector<int> target_degrees,
                                      std::vector<int> source_degrees, std::span<const ModuleElement> columns);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return target_.size(); }
    std::size_t cols() const noexcept { return source_.size(); }
    const std::vector<int>& target_degrees() const noexcept { return target_; }
    const std::vector<int>& source_degrees() const noexcept { return source_; }
    const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
    const std::vector<Polynomial>& entries() const noexcept { return entries_; }

    bool is_zero() const noexcept;
    /// Position of a nonzero scalar entry, scanning columns left to right.
    std::optional<std::pair<std::size_t, std::size_t>> find_unit_entry() const;

    /// this o rhs; requires rhs.target_degrees() == source_degrees().
    GradedFreeMap compose(const GradedFreeMap& rhs) const;
    GradedFreeMap add(const GradedFreeMap& rhs) const;

    /// Column j as an element of the target free module.
    ModuleElement column(std::size_t j, const ModuleOrder& order) const;
    std::vector<ModuleElement> columns(const ModuleOrder& order) const;

    /// Same matrix over another ring with identical variables (used to view an
    /// R-matrix over Q and back).
    GradedFreeMap over(RingPtr ring) const;

    /// Submatrix keeping the listed columns.
    GradedFreeMap select_columns(std::span<const std::size_t> keep) const;

    friend bool operator==(const GradedFreeMap& a, const GradedFreeMap& b) {
        return a.target_ == b.target_ && a.source_ == b.source_ && a.entries_ == b.entries_;
    }

private:
    RingPtr ring_;
    std::vector<int> target_;
    std::vector<int> source_;
    std::vector<Polynomial> entries_;
};

/// Transpose with negated degree vectors: for m : F -> G, m* : G* -> F*.
GradedFreeMap dual_map(const GradedFreeMap& m);

/// m (x) I_k, rows/cols indexed (i, b) -> i * k + b. Degree vectors are
/// target[i] + inner[b] and source[j] + inner[b].
GradedFreeMap kronecker_identity(const GradedFreeMap& m, const std::vector<int>& inner_degrees);

/// Matrix given by rows with source degrees read off the entries. An all-zero
/// column gets the degree of the first target generator.
GradedFreeMap matrix_with_inferred_sources(RingPtr ring, std::vector<int> target_degrees,
                                           const std::vector<std::vector<Polynomial>>& rows);

/// Term-over-position order on the free module with the given shifts.
ModuleOrder graded_order(const RingContext& ring, std::vector<int> shifts);

}  // namespace hyperext

#endif

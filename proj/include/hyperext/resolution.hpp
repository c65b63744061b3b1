#ifndef HYPEREXT_RESOLUTION_HPP
#define HYPEREXT_RESOLUTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperext/module.hpp"

namespace hyperext {

/// Graded Betti numbers: entry (i, d) counts generators of F_i in degree d.
class BettiTable {
public:
    BettiTable() = default;
    explicit BettiTable(const std::vector<std::vector<int>>& module_degrees);

    int length() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
    int rank(int i) const;
    int graded(int i, int d) const;
    std::vector<int> totals() const { return ranks_; }
    const std::vector<std::map<int, int>>& entries() const noexcept { return graded_; }

    /// Macaulay-style grid: column i, row d - i, "." for zero.
    std::string render() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::vector<int> ranks_;
    std::vector<std::map<int, int>> graded_;
};

/// A pair of square maps over Q with A B = B A = f I. A : F -> G and
/// B : G(-deg f) -> F.
struct MatrixFactorization {
    GradedFreeMap A;
    GradedFreeMap B;
    Polynomial f;

    bool verify() const;
    /// (B, A shifted by deg f), again a factorization of f.
    MatrixFactorization swapped() const;
};

/// Graded isomorphisms carrying d_{i+2} to d_i:
/// lower : F_{i+1} -> F_{i-1}(-e), upper : F_{i+2} -> F_i(-e) with
/// lower * d_{i+2} = d_i * upper modulo f.
struct PeriodMatch {
    int index;
    GradedFreeMap lower;
    GradedFreeMap upper;
};

struct PeriodicityCertificate {
    int start;
    std::vector<PeriodMatch> matches;
};

/// F_0 <- F_1 <- ... <- F_L with d_i = differential(i) : F_i -> F_{i-1}.
class FreeResolution {
public:
    FreeResolution(RingPtr ring, std::vector<int> f0_degrees, std::vector<GradedFreeMap> differentials,
                   bool terminated);

    const RingPtr& ring() const noexcept { return ring_; }
    /// Number of differentials stored.
    int length() const noexcept { return static_cast<int>(diffs_.size()); }
    const GradedFreeMap& differential(int i) const { return diffs_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<GradedFreeMap>& differentials() const noexcept { return diffs_; }
    /// Degrees of F_i; empty past the end of a terminated resolution.
    std::vector<int> module_degrees(int i) const;
    BettiTable betti() const;

    /// The last stored module is followed by zero.
    bool terminated() const noexcept { return terminated_; }
    bool minimal() const;
    std::optional<int> periodic_from() const {
        return certificate_ ? std::optional<int>(certificate_->start) : std::nullopt;
    }
    const std::optional<PeriodicityCertificate>& certificate() const noexcept { return certificate_; }
    const std::optional<MatrixFactorization>& factorization() const noexcept { return factorization_; }
    bool truncated() const noexcept { return !terminated_ && !certificate_; }
    /// Projective dimension when terminated.
    std::optional<int> projective_dimension() const;

    /// Composition of consecutive differentials vanishes (modulo f).
    bool is_complex() const;

    void set_periodicity(PeriodicityCertificate cert, MatrixFactorization mf);

private:
    RingPtr ring_;
    std::vector<int> f0_;
    std::vector<GradedFreeMap> diffs_;
    bool terminated_;
    std::optional<PeriodicityCertificate> certificate_;
    std::optional<MatrixFactorization> factorization_;
};

/// Minimal graded resolution of M with at most length_cap differentials
/// (default: the ring's cap). Over a hypersurface periodicity is certified
/// when it is visible in the computed window.
FreeResolution minimal_resolution(const PresentedModule& M, std::optional<int> length_cap = std::nullopt);

/// Cancels every unit entry, keeping the complex homotopy equivalent.
FreeResolution minimize(const FreeResolution& res);

/// Smallest s >= 1 such that for all computed i >= s the Betti numbers of
/// F_{i+2} are those of F_i shifted by deg f and explicit isomorphisms carry
/// d_{i+2} to d_i; needs at least two such i.
std::optional<PeriodicityCertificate> detect_periodicity(const FreeResolution& res, const RingContext& ring);

/// Lifts d_s and d_{s+1} to Q and corrects the second so that A B = f I.
/// Throws EngineBug when the lift fails.
MatrixFactorization lift_matrix_factorization(const FreeResolution& res, const PeriodicityCertificate& cert,
                                              const RingContext& ring);

}  // namespace hyperext

#endif

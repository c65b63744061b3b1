#ifndef HYPEREXT_RING_HPP
#define HYPEREXT_RING_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperext/polynomial.hpp"

namespace hyperext {

/// Caps that keep every completion finite; recorded in reports.
struct ComputeLimits {
    int degree_cap = 30;
    /// Resolution length cap; nullopt means n + 6.
    std::optional<int> length_cap;
    /// Sink for Gröbner traces of every completion over the ring; not owned.
    std::ostream* gb_trace = nullptr;
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// The standard-graded ring a computation runs over: either the polynomial
/// ring Q = F_p[x_1..x_n] or a hypersurface R = Q/(f) with f homogeneous of
/// degree >= 2. Q is a domain, so f is automatically a nonzerodivisor.
class RingContext : public std::enable_shared_from_this<RingContext> {
public:
    const PolynomialRing& polys() const noexcept { return polys_; }
    const PrimeField& field() const noexcept { return polys_.field(); }
    int num_variables() const noexcept { return polys_.num_variables(); }

    bool is_hypersurface() const noexcept { return relation_.has_value(); }
    const std::optional<Polynomial>& hypersurface() const noexcept { return relation_; }
    int relation_degree() const noexcept { return relation_ ? *relation_->homogeneous_degree() : 0; }

    /// Krull dimension: n for Q, n - 1 for Q/(f).
    int dimension() const noexcept { return num_variables() - (relation_ ? 1 : 0); }

    /// The regular ring Q underneath (this ring itself when regular).
    RingPtr ambient() const;

    const ComputeLimits& limits() const noexcept { return limits_; }
    int degree_cap() const noexcept { return limits_.degree_cap; }
    int default_length_cap() const noexcept {
        return limits_.length_cap.value_or(num_variables() + 6);
    }

    /// Canonical representative modulo f (identity on Q).
    Polynomial reduce(const Polynomial& p) const;

    /// e.g. "F_101[x,y,z]/(x*y)".
    std::string description() const;

    /// Structural equality: same prime, variables, order and relation.
    bool same_ring(const RingContext& other) const noexcept;

private:
    friend RingPtr make_ring(std::uint32_t, std::vector<std::string>, MonomialOrder, ComputeLimits);
    friend RingPtr make_hypersurface(const RingPtr&, const Polynomial&);
    friend RingPtr with_limits(const RingPtr&, ComputeLimits);
    RingContext(PolynomialRing polys, std::optional<Polynomial> relation, ComputeLimits limits, RingPtr ambient)
        : polys_(std::move(polys)), relation_(std::move(relation)), limits_(limits), ambient_(std::move(ambient)) {}

    PolynomialRing polys_;
    std::optional<Polynomial> relation_;
    ComputeLimits limits_;
    RingPtr ambient_;
};

/// Regular ring F_p[vars]. Throws std::invalid_argument for a non-prime p.
RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::DegRevLex, ComputeLimits limits = {});

/// Hypersurface Q/(f). Rejects f = 0, inhomogeneous f and deg f < 2.
RingPtr make_hypersurface(const RingPtr& regular, const Polynomial& f);
RingPtr make_hypersurface(const RingPtr& regular, std::string_view f);

/// Same ring with different caps.
RingPtr with_limits(const RingPtr& ring, ComputeLimits limits);

}  // namespace hyperext

#endif

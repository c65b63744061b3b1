#include "hyperext/ring.hpp"

#include <stdexcept>

namespace hyperext {

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order, ComputeLimits limits) {
    if (limits.degree_cap < 1) throw std::invalid_argument("degree cap must be positive");
    if (limits.length_cap && *limits.length_cap < 1) throw std::invalid_argument("length cap must be positive");
    PolynomialRing polys(PrimeField(p), std::move(vars), order);
    return RingPtr(new RingContext(std::move(polys), std::nullopt, limits, nullptr));
}

RingPtr make_hypersurface(const RingPtr& regular, const Polynomial& f) {
    if (!regular) throw std::invalid_argument("null ring");
    if (regular->is_hypersurface()) throw std::invalid_argument("quotients of hypersurfaces are not supported");
    if (f.num_variables() != regular->num_variables())
        throw std::invalid_argument("relation lives in a different polynomial ring");
    if (f.is_zero()) throw std::invalid_argument("hypersurface relation must be nonzero");
    auto d = f.homogeneous_degree();
    if (!d) throw std::invalid_argument("hypersurface relation must be homogeneous");
    if (*d < 2) throw std::invalid_argument("hypersurface relation must have degree >= 2 (got " + std::to_string(*d) + ")");
    Polynomial monic = regular->polys().scale(f, regular->field().inv(f.leading_term().coeff));
    return RingPtr(new RingContext(regular->polys(), monic, regular->limits(), regular));
}

RingPtr make_hypersurface(const RingPtr& regular, std::string_view f) {
    if (!regular) throw std::invalid_argument("null ring");
    return make_hypersurface(regular, regular->polys().parse(f));
}

RingPtr with_limits(const RingPtr& ring, ComputeLimits limits) {
    if (limits.degree_cap < 1) throw std::invalid_argument("degree cap must be positive");
    RingPtr amb = ring->ambient_ ? with_limits(ring->ambient_, limits) : nullptr;
    return RingPtr(new RingContext(ring->polys_, ring->relation_, limits, amb));
}

RingPtr RingContext::ambient() const {
    if (ambient_) return ambient_;
    return shared_from_this();
}

Polynomial RingContext::reduce(const Polynomial& p) const {
    if (!relation_) return p;
    return polys_.divide(p, *relation_).remainder;
}

std::string RingContext::description() const {
    std::string out = "F_" + std::to_string(field().prime()) + "[";
    for (std::size_t i = 0; i < polys_.variables().size(); ++i) {
        if (i) out += ',';
        out += polys_.variables()[i];
    }
    out += "]";
    if (relation_) out += "/(" + polys_.render(*relation_) + ")";
    return out;
}

bool RingContext::same_ring(const RingContext& other) const noexcept {
    return field() == other.field() && polys_.variables() == other.polys_.variables() &&
           polys_.order() == other.polys_.order() && relation_ == other.relation_;
}

}  // namespace hyperext

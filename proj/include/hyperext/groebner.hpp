#ifndef HYPEREXT_GROEBNER_HPP
#define HYPEREXT_GROEBNER_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hyperext/free_map.hpp"
#include "hyperext/module_element.hpp"
#include "hyperext/ring.hpp"

namespace hyperext {

struct GroebnerOptions {
    /// Largest polynomial degree of an S-pair lcm before DegreeCapExceeded.
    int degree_cap = 30;
    /// Stop after all work of weighted degree <= this value; the basis is then
    /// only complete through that degree.
    std::optional<int> truncate_degree;
    /// Text trace of pairs and insertions.
    std::ostream* trace = nullptr;

    static GroebnerOptions for_ring(const RingContext& ring) {
        GroebnerOptions o;
        o.degree_cap = ring.degree_cap();
        o.trace = ring.limits().gb_trace;
        return o;
    }
};

/// Gröbner basis of a homogeneous submodule of a graded free module. Over a
/// hypersurface the basis also covers f * e_j for every position j, so normal
/// forms are taken modulo the relation as well.
class GroebnerBasis {
public:
    GroebnerBasis(PrimeField field, ModuleOrder order, bool over_quotient, std::vector<ModuleElement> generators,
                  std::optional<int> complete_through);

    const std::vector<ModuleElement>& generators() const noexcept { return gens_; }
    const ModuleOrder& order() const noexcept { return order_; }
    const PrimeField& field() const noexcept { return field_; }
    bool over_quotient() const noexcept { return over_quotient_; }
    /// nullopt for a complete basis.
    std::optional<int> complete_through() const noexcept { return complete_through_; }
    std::size_t rank() const noexcept { return order_.rank(); }

    /// Remainder with no term divisible by a leading term; zero iff v lies in
    /// the submodule.
    ModuleElement normal_form(const ModuleElement& v) const;
    bool contains(const ModuleElement& v) const { return normal_form(v).is_zero(); }

    std::vector<Monomial> leading_monomials(std::uint32_t component) const;

private:
    std::optional<std::size_t> find_divisor(const ModuleTerm& t) const;

    PrimeField field_;
    ModuleOrder order_;
    bool over_quotient_;
    std::vector<ModuleElement> gens_;
    std::optional<int> complete_through_;
    std::vector<std::vector<std::size_t>> by_component_;
};

/// Reduced Gröbner basis of the submodule generated by `gens` (plus f * F over
/// a hypersurface). Deterministic for a fixed input order.
GroebnerBasis buchberger(const RingContext& ring, const ModuleOrder& order, std::span<const ModuleElement> gens,
                         const GroebnerOptions& options);
GroebnerBasis buchberger(const RingContext& ring, const ModuleOrder& order, std::span<const ModuleElement> gens);

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb);

/// Indices of a minimal generating subset of `gens` modulo the submodule
/// generated by `background` (and f * F over a hypersurface), in increasing
/// degree. Only work up to the largest degree in `gens` is done.
std::vector<std::size_t> select_minimal_generators(const RingContext& ring, const ModuleOrder& order,
                                                   std::span<const ModuleElement> gens,
                                                   std::span<const ModuleElement> background);

/// Generators (not necessarily minimal) of
///   { c : m c in image(relations) + f * target }  inside the source of m,
/// sorted for the term-over-position order on the source.
std::vector<ModuleElement> kernel_elements(const GradedFreeMap& m, const GradedFreeMap* relations = nullptr);

/// Minimal generators of ker(m) as the columns of a new map into the source of
/// m; m o syzygies(m) = 0.
GradedFreeMap syzygies(const GradedFreeMap& m);

/// Minimal generators of the image of m, as a column selection of m.
GradedFreeMap minimal_image_generators(const GradedFreeMap& m);

/// Every S-pair of the basis reduces to zero (the Buchberger criterion).
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

}  // namespace hyperext

#endif

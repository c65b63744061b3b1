#ifndef HYPEREXT_MODULE_HPP
#define HYPEREXT_MODULE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hyperext/free_map.hpp"
#include "hyperext/groebner.hpp"
#include "hyperext/ring.hpp"

namespace hyperext {

/// Composition length, possibly infinite. Infinite is an ordinary value:
/// finite-length hypotheses are checked against it, never assumed.
class Length {
public:
    static Length finite(std::int64_t v) { return Length(true, v); }
    static Length infinite() { return Length(false, 0); }

    bool is_finite() const noexcept { return finite_; }
    /// Only meaningful when finite.
    std::int64_t value() const noexcept { return value_; }
    std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

    friend bool operator==(const Length&, const Length&) = default;

private:
    Length(bool f, std::int64_t v) : finite_(f), value_(v) {}
    bool finite_;
    std::int64_t value_;
};

/// M = coker(presentation), presentation : F_1 -> F_0 with rows = generators
/// and columns = relations. The Gröbner basis of the relation submodule and the
/// Hilbert series data are computed once on first use and then shared by all
/// copies; the fill is synchronized.
class PresentedModule {
public:
    explicit PresentedModule(GradedFreeMap presentation);

    static PresentedModule free(RingPtr ring, std::vector<int> degrees);
    static PresentedModule zero(RingPtr ring);

    const RingPtr& ring() const noexcept { return presentation_.ring(); }
    const GradedFreeMap& presentation() const noexcept { return presentation_; }
    std::size_t num_generators() const noexcept { return presentation_.rows(); }
    const std::vector<int>& generator_degrees() const noexcept { return presentation_.target_degrees(); }

    /// Gröbner basis of image(presentation) (+ f F_0), term-over-position.
    const GroebnerBasis& relation_basis() const;

    bool is_zero() const;
    /// dim_k M_d for 0 <= d <= d_max.
    std::vector<std::int64_t> hilbert_function(int d_max) const;
    /// dim_k M_d for lo <= d <= hi.
    std::vector<std::int64_t> hilbert_window(int lo, int hi) const;
    std::int64_t hilbert_value(int d) const;
    Length length() const;
    /// Krull dimension of M; -1 for the zero module.
    int krull_dimension() const;
    /// Smallest generator degree (0 for a module without generators).
    int min_generator_degree() const noexcept;

private:
    struct Cache;
    const Cache& cache() const;

    GradedFreeMap presentation_;
    std::shared_ptr<Cache> cache_;
};

/// Module homomorphism given on generators: `matrix` maps the generators of
/// `source` into the free cover of `target`.
struct ModuleMap {
    PresentedModule source;
    PresentedModule target;
    GradedFreeMap matrix;
};

/// ker(m) as a presented module (generators = minimal syzygies).
PresentedModule kernel(const GradedFreeMap& m);
PresentedModule cokernel(const GradedFreeMap& m);

/// Minimal presentation of M: minimal relations and no scalar entries, so the
/// generators are minimal generators of M.
PresentedModule minimal_presentation(const PresentedModule& M);

/// sum_k M(-shifts[k]) with generator (k, b) at index k * |gens M| + b.
PresentedModule direct_sum_shifted(const PresentedModule& M, const std::vector<int>& shifts);
PresentedModule direct_sum(const PresentedModule& A, const PresentedModule& B);
PresentedModule tensor_product(const PresentedModule& M, const PresentedModule& N);
/// M(-d): generator degrees increased by d.
PresentedModule shift(const PresentedModule& M, int d);

/// For m : F -> G, the induced map F (x) N -> G (x) N.
ModuleMap tensor_with(const GradedFreeMap& m, const PresentedModule& N);
/// For m : F -> G, the induced map Hom(G, N) -> Hom(F, N).
ModuleMap hom_into(const GradedFreeMap& m, const PresentedModule& N);
/// The zero map from the zero module into Y, and from Y to the zero module.
ModuleMap zero_map_into(const PresentedModule& Y);
ModuleMap zero_map_from(const PresentedModule& Y);

/// Whether outgoing o incoming = 0 as a map of modules.
bool composes_to_zero(const ModuleMap& incoming, const ModuleMap& outgoing);

/// ker(outgoing) / im(incoming). Throws InvalidComplex when the composition is
/// nonzero.
PresentedModule homology_at(const ModuleMap& incoming, const ModuleMap& outgoing);
/// Cheaper zero test for the same homology.
bool homology_vanishes(const ModuleMap& incoming, const ModuleMap& outgoing);

std::vector<std::int64_t> hilbert_function(const PresentedModule& M, int d_max);
Length length(const PresentedModule& M);

/// k = ring / (all variables), generated in degree 0.
PresentedModule residue_field(const RingPtr& ring);

/// An R-module viewed over the ambient regular ring Q: presentation [A | f I].
PresentedModule restrict_to_ambient(const PresentedModule& M);

}  // namespace hyperext

#endif

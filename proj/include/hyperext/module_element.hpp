#ifndef HYPEREXT_MODULE_ELEMENT_HPP
#define HYPEREXT_MODULE_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperext/field.hpp"
#include "hyperext/monomial.hpp"

namespace hyperext {

/// c * m * e_component
struct ModuleTerm {
    Monomial monomial;
    std::uint32_t component = 0;
    Coeff coeff = 0;
    friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

enum class ModuleOrderKind {
    /// Weighted degree, then the monomial order, then position.
    TermOverPosition,
    /// Position first (lower index is larger), then the monomial order.
    /// Used as an elimination order for kernels.
    PositionOverTerm,
};

/// Monomial order extended to a graded free module sum_i Q(-shift_i).
class ModuleOrder {
public:
    ModuleOrder(MonomialOrder mono, ModuleOrderKind kind, std::vector<int> shifts)
        : mono_(mono), kind_(kind), shifts_(std::move(shifts)) {}

    MonomialOrder monomial_order() const noexcept { return mono_; }
    ModuleOrderKind kind() const noexcept { return kind_; }
    const std::vector<int>& shifts() const noexcept { return shifts_; }
    std::size_t rank() const noexcept { return shifts_.size(); }

    int weighted_degree(const Monomial& m, std::uint32_t comp) const noexcept {
        return m.degree() + shifts_[comp];
    }

    std::strong_ordering compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                                 std::uint32_t cb) const noexcept {
        if (kind_ == ModuleOrderKind::PositionOverTerm) {
            if (ca != cb) return cb <=> ca;
            return monomial_compare(a, b, mono_);
        }
        int da = weighted_degree(a, ca), db = weighted_degree(b, cb);
        if (da != db) return da <=> db;
        auto c = monomial_compare(a, b, mono_);
        if (c != std::strong_ordering::equal) return c;
        return cb <=> ca;
    }
    std::strong_ordering compare(const ModuleTerm& a, const ModuleTerm& b) const noexcept {
        return compare(a.monomial, a.component, b.monomial, b.component);
    }

private:
    MonomialOrder mono_;
    ModuleOrderKind kind_;
    std::vector<int> shifts_;
};

/// Element of a graded free module: terms sorted descending under the
/// ModuleOrder it was built for. Homogeneous elements have all terms of one
/// weighted degree.
class ModuleElement {
public:
    ModuleElement() = default;
    explicit ModuleElement(std::vector<ModuleTerm> sorted_terms) : terms_(std::move(sorted_terms)) {}

    /// Sorts and merges arbitrary terms.
    static ModuleElement from_terms(std::vector<ModuleTerm> terms, const ModuleOrder& order, const PrimeField& field);
    static ModuleElement basis_vector(std::uint32_t component) {
        return ModuleElement({ModuleTerm{Monomial{}, component, 1}});
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::span<const ModuleTerm> terms() const noexcept { return terms_; }
    std::vector<ModuleTerm>& mutable_terms() noexcept { return terms_; }
    const ModuleTerm& lead() const { return terms_.front(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Weighted degree of the leading term (homogeneous elements only).
    int degree(const ModuleOrder& order) const { return order.weighted_degree(lead().monomial, lead().component); }
    bool single_component() const noexcept;

    /// Re-sorts for another order over the same free module.
    ModuleElement resorted(const ModuleOrder& order) const;

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

private:
    std::vector<ModuleTerm> terms_;
};

/// Element arithmetic for one field and order.
class ModuleArithmetic {
public:
    ModuleArithmetic(const PrimeField& field, const ModuleOrder& order) : field_(field), order_(order) {}

    /// a - c * m * b
    ModuleElement sub_multiple(const ModuleElement& a, Coeff c, const Monomial& m, const ModuleElement& b) const;
    ModuleElement add(const ModuleElement& a, const ModuleElement& b) const;
    ModuleElement scale(const ModuleElement& a, Coeff c) const;
    ModuleElement make_monic(const ModuleElement& a) const;

    const PrimeField& field() const noexcept { return field_; }
    const ModuleOrder& order() const noexcept { return order_; }

private:
    const PrimeField& field_;
    const ModuleOrder& order_;
};

}  // namespace hyperext

#endif

#ifndef HYPEREXT_POLYNOMIAL_HPP
#define HYPEREXT_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperext/field.hpp"
#include "hyperext/monomial.hpp"

namespace hyperext {

struct Term {
    Monomial monomial;
    Coeff coeff = 0;
    friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial as a canonical term list: sorted descending under the owning
/// ring's order, no zero coefficients, no repeated monomials. Construct through
/// PolynomialRing, which maintains the canonical form.
class Polynomial {
public:
    Polynomial() = default;

    int num_variables() const noexcept { return nvars_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
    const Term& leading_term() const { return terms_.front(); }

    /// Common total degree of all terms; nullopt for the zero polynomial and
    /// for inhomogeneous polynomials.
    std::optional<int> homogeneous_degree() const noexcept;
    bool is_homogeneous() const noexcept { return is_zero() || homogeneous_degree().has_value(); }
    int total_degree() const noexcept;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    friend class PolynomialRing;
    Polynomial(int nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {}

    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// Raised by PolynomialRing::parse; `offset` is the byte offset into the input.
class PolynomialParseError : public std::invalid_argument {
public:
    PolynomialParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// F_p[x_1..x_n] with a fixed monomial order.
class PolynomialRing {
public:
    PolynomialRing(PrimeField field, std::vector<std::string> variables,
                   MonomialOrder order = MonomialOrder::DegRevLex);

    const PrimeField& field() const noexcept { return field_; }
    int num_variables() const noexcept { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    MonomialOrder order() const noexcept { return order_; }
    std::optional<int> variable_index(std::string_view name) const noexcept;

    Polynomial zero() const { return Polynomial(num_variables(), {}); }
    Polynomial one() const { return constant(1); }
    Polynomial constant(std::int64_t c) const;
    Polynomial variable(int index) const;
    Polynomial term(const Monomial& m, Coeff c) const;
    /// Sorts and merges arbitrary terms into canonical form.
    Polynomial from_terms(std::vector<Term> terms) const;

    Polynomial add(const Polynomial& a, const Polynomial& b) const;
    Polynomial sub(const Polynomial& a, const Polynomial& b) const;
    Polynomial neg(const Polynomial& a) const;
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;
    Polynomial scale(const Polynomial& a, Coeff c) const;
    Polynomial mul_term(const Polynomial& a, const Monomial& m, Coeff c) const;
    Polynomial pow(const Polynomial& a, unsigned e) const;

    /// a - c*m*b, the elementary reduction step.
    Polynomial sub_multiple(const Polynomial& a, Coeff c, const Monomial& m, const Polynomial& b) const;

    /// Remainder and quotient of division by a single polynomial.
    struct Division {
        Polynomial quotient;
        Polynomial remainder;
    };
    Division divide(const Polynomial& a, const Polynomial& divisor) const;

    /// Constant term value (0 if absent).
    Coeff constant_coefficient(const Polynomial& a) const noexcept;

    /// Accepts `3*x^2*y + z`, optional `*`, parentheses, integer powers.
    Polynomial parse(std::string_view text) const;
    /// Canonical rendering in descending order with balanced coefficients.
    std::string render(const Polynomial& a) const;
    std::string render_monomial(const Monomial& m) const;

private:
    void check_compatible(const Polynomial& a) const;

    PrimeField field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

}  // namespace hyperext

#endif

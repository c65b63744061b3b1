#ifndef HYPEREXT_MONOMIAL_HPP
#define HYPEREXT_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hyperext {

inline constexpr int kMaxVariables = 8;

/// Dense exponent vector. Unused trailing slots stay zero, so monomials over
/// fewer than kMaxVariables variables compare correctly without a size field.
class Monomial {
public:
    Monomial() = default;
    /// Throws std::invalid_argument for negative exponents, exponents above
    /// 255 or more than kMaxVariables entries.
    explicit Monomial(std::span<const int> exponents);

    static Monomial variable(int index, int power = 1);

    int operator[](int i) const noexcept { return exp_[static_cast<std::size_t>(i)]; }
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        for (int i = 0; i < kMaxVariables; ++i)
            if (exp_[i] > other.exp_[i]) return false;
        return true;
    }
    bool coprime(const Monomial& other) const noexcept {
        for (int i = 0; i < kMaxVariables; ++i)
            if (exp_[i] != 0 && other.exp_[i] != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const;
    /// this / other; requires other.divides(*this).
    Monomial quotient(const Monomial& other) const noexcept;
    Monomial lcm(const Monomial& other) const noexcept;
    Monomial gcd(const Monomial& other) const noexcept;

    /// If the monomial is a pure power of one variable, that variable's index.
    std::optional<int> pure_power_variable() const noexcept;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::array<std::uint8_t, kMaxVariables> exp_{};
    std::uint16_t degree_ = 0;
};

enum class MonomialOrder { DegRevLex, Lex, DegLex };

std::string_view to_string(MonomialOrder order) noexcept;
std::optional<MonomialOrder> parse_monomial_order(std::string_view name) noexcept;

/// Total order on monomials; `greater` means earlier in a polynomial's
/// descending term list.
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept;

/// All monomials of degree d in the first nvars variables, lexicographically
/// descending by exponent vector.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace hyperext

#endif

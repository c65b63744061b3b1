#ifndef HYPEREXT_FIELD_HPP
#define HYPEREXT_FIELD_HPP

#include <cstdint>

namespace hyperext {

/// Canonical residue in [0, p).
using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// The prime field F_p, 2 <= p < 2^31. Elements are plain `Coeff` values kept
/// in canonical form; all arithmetic goes through the field object.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultPrime = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t prime() const noexcept { return p_; }

    Coeff from_integer(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }
    Coeff add(Coeff a, Coeff b) const noexcept {
        Coeff s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
    }
    /// Throws std::domain_error on zero.
    Coeff inv(Coeff a) const;
    Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

    /// Representative in (-p/2, p/2], used for rendering.
    std::int64_t balanced(Coeff a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

}  // namespace hyperext

#endif

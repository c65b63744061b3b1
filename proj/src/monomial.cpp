#include "hyperext/monomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hyperext {

Monomial::Monomial(std::span<const int> exponents) {
    if (exponents.size() > kMaxVariables)
        throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
    int total = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > 255)
            throw std::invalid_argument("exponent out of range: " + std::to_string(exponents[i]));
        exp_[i] = static_cast<std::uint8_t>(exponents[i]);
        total += exponents[i];
    }
    degree_ = static_cast<std::uint16_t>(total);
}

Monomial Monomial::variable(int index, int power) {
    if (index < 0 || index >= kMaxVariables) throw std::invalid_argument("variable index out of range");
    std::array<int, kMaxVariables> e{};
    e[static_cast<std::size_t>(index)] = power;
    return Monomial(std::span<const int>(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) {
        int e = exp_[i] + other.exp_[i];
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        r.exp_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
    return r;
}

Monomial Monomial::quotient(const Monomial& other) const noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - other.exp_[i]);
    r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
    Monomial r;
    int total = 0;
    for (int i = 0; i < kMaxVariables; ++i) {
        r.exp_[i] = std::max(exp_[i], other.exp_[i]);
        total += r.exp_[i];
    }
    r.degree_ = static_cast<std::uint16_t>(total);
    return r;
}

Monomial Monomial::gcd(const Monomial& other) const noexcept {
    Monomial r;
    int total = 0;
    for (int i = 0; i < kMaxVariables; ++i) {
        r.exp_[i] = std::min(exp_[i], other.exp_[i]);
        total += r.exp_[i];
    }
    r.degree_ = static_cast<std::uint16_t>(total);
    return r;
}

std::optional<int> Monomial::pure_power_variable() const noexcept {
    if (degree_ == 0) return std::nullopt;
    for (int i = 0; i < kMaxVariables; ++i)
        if (exp_[i] != 0) return exp_[i] == degree_ ? std::optional<int>(i) : std::nullopt;
    return std::nullopt;
}

std::string_view to_string(MonomialOrder order) noexcept {
    switch (order) {
        case MonomialOrder::DegRevLex: return "degrevlex";
        case MonomialOrder::Lex: return "lex";
        case MonomialOrder::DegLex: return "deglex";
    }
    return "degrevlex";
}

std::optional<MonomialOrder> parse_monomial_order(std::string_view name) noexcept {
    if (name == "degrevlex") return MonomialOrder::DegRevLex;
    if (name == "lex") return MonomialOrder::Lex;
    if (name == "deglex") return MonomialOrder::DegLex;
    return std::nullopt;
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
    if (order != MonomialOrder::Lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
    if (order == MonomialOrder::DegRevLex) {
        // Same degree: the monomial with the smaller exponent in the last
        // differing variable is the larger one.
        for (int i = kMaxVariables - 1; i >= 0; --i)
            if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
    }
    for (int i = 0; i < kMaxVariables; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0 || nvars < 0 || nvars > kMaxVariables) return out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            e[static_cast<std::size_t>(var)] = left;
            out.emplace_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(var)] = k;
            self(self, var + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace hyperext

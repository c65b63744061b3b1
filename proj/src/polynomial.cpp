#include "hyperext/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace hyperext {

std::optional<int> Polynomial::homogeneous_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.front().monomial.degree();
    for (const auto& t : terms_)
        if (t.monomial.degree() != d) return std::nullopt;
    return d;
}

int Polynomial::total_degree() const noexcept {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

PolynomialRing::PolynomialRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
    if (vars_.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
    if (vars_.size() > static_cast<std::size_t>(kMaxVariables))
        throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw std::invalid_argument("invalid variable name '" + v + "'");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument("invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
    }
}

std::optional<int> PolynomialRing::variable_index(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

void PolynomialRing::check_compatible(const Polynomial& a) const {
    if (a.nvars_ != num_variables())
        throw std::invalid_argument("polynomial has " + std::to_string(a.nvars_) + " variables, ring has " +
                                    std::to_string(num_variables()));
}

Polynomial PolynomialRing::constant(std::int64_t c) const {
    Coeff v = field_.from_integer(c);
    if (v == 0) return zero();
    return Polynomial(num_variables(), {Term{Monomial{}, v}});
}

Polynomial PolynomialRing::variable(int index) const {
    if (index < 0 || index >= num_variables()) throw std::invalid_argument("variable index out of range");
    return Polynomial(num_variables(), {Term{Monomial::variable(index), 1}});
}

Polynomial PolynomialRing::term(const Monomial& m, Coeff c) const {
    c %= field_.prime();
    if (c == 0) return zero();
    return Polynomial(num_variables(), {Term{m, c}});
}

Polynomial PolynomialRing::from_terms(std::vector<Term> terms) const {
    for (const auto& t : terms)
        for (int i = num_variables(); i < kMaxVariables; ++i)
            if (t.monomial[i] != 0) throw std::invalid_argument("monomial uses a variable outside the ring");
    std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
        return monomial_compare(a.monomial, b.monomial, order_) == std::strong_ordering::greater;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        Coeff c = t.coeff % field_.prime();
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff = field_.add(out.back().coeff, c);
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(Term{t.monomial, c});
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return Polynomial(num_variables(), std::move(out));
}

Polynomial PolynomialRing::sub_multiple(const Polynomial& a, Coeff c, const Monomial& m, const Polynomial& b) const {
    check_compatible(a);
    check_compatible(b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    Coeff negc = field_.neg(c);
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size()) {
            out.push_back(a.terms_[i++]);
            continue;
        }
        Term bt{b.terms_[j].monomial * m, field_.mul(b.terms_[j].coeff, negc)};
        if (i == a.terms_.size()) {
            if (bt.coeff != 0) out.push_back(bt);
            ++j;
            continue;
        }
        auto cmp = monomial_compare(a.terms_[i].monomial, bt.monomial, order_);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(a.terms_[i++]);
        } else if (cmp == std::strong_ordering::less) {
            if (bt.coeff != 0) out.push_back(bt);
            ++j;
        } else {
            Coeff s = field_.add(a.terms_[i].coeff, bt.coeff);
            if (s != 0) out.push_back(Term{bt.monomial, s});
            ++i;
            ++j;
        }
    }
    return Polynomial(num_variables(), std::move(out));
}

Polynomial PolynomialRing::add(const Polynomial& a, const Polynomial& b) const {
    return sub_multiple(a, field_.neg(1), Monomial{}, b);
}

Polynomial PolynomialRing::sub(const Polynomial& a, const Polynomial& b) const {
    return sub_multiple(a, 1, Monomial{}, b);
}

Polynomial PolynomialRing::neg(const Polynomial& a) const { return scale(a, field_.neg(1)); }

Polynomial PolynomialRing::scale(const Polynomial& a, Coeff c) const {
    check_compatible(a);
    if (c % field_.prime() == 0) return zero();
    std::vector<Term> out(a.terms_);
    for (auto& t : out) t.coeff = field_.mul(t.coeff, c);
    return Polynomial(num_variables(), std::move(out));
}

Polynomial PolynomialRing::mul_term(const Polynomial& a, const Monomial& m, Coeff c) const {
    check_compatible(a);
    if (c % field_.prime() == 0) return zero();
    std::vector<Term> out(a.terms_);
    for (auto& t : out) {
        t.monomial = t.monomial * m;
        t.coeff = field_.mul(t.coeff, c);
    }
    return Polynomial(num_variables(), std::move(out));
}

Polynomial PolynomialRing::mul(const Polynomial& a, const Polynomial& b) const {
    check_compatible(a);
    check_compatible(b);
    if (a.terms_.size() > b.terms_.size()) return mul(b, a);
    Polynomial acc = zero();
    for (const auto& t : a.terms_) acc = sub_multiple(acc, field_.neg(t.coeff), t.monomial, b);
    return acc;
}

Polynomial PolynomialRing::pow(const Polynomial& a, unsigned e) const {
    Polynomial result = one();
    Polynomial base = a;
    while (e != 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1;
        if (e != 0) base = mul(base, base);
    }
    return result;
}

PolynomialRing::Division PolynomialRing::divide(const Polynomial& a, const Polynomial& divisor) const {
    check_compatible(a);
    check_compatible(divisor);
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    const Term& lead = divisor.terms_.front();
    Coeff lead_inv = field_.inv(lead.coeff);
    std::vector<Term> quotient;
    std::vector<Term> remainder;
    Polynomial rest = a;
    while (!rest.is_zero()) {
        const Term t = rest.terms_.front();
        if (lead.monomial.divides(t.monomial)) {
            Monomial q = t.monomial.quotient(lead.monomial);
            Coeff c = field_.mul(t.coeff, lead_inv);
            quotient.push_back(Term{q, c});
            rest = sub_multiple(rest, c, q, divisor);
        } else {
            remainder.push_back(t);
            rest.terms_.erase(rest.terms_.begin());
        }
    }
    return Division{from_terms(std::move(quotient)), Polynomial(num_variables(), std::move(remainder))};
}

Coeff PolynomialRing::constant_coefficient(const Polynomial& a) const noexcept {
    if (!a.terms_.empty() && a.terms_.back().monomial.is_one()) return a.terms_.back().coeff;
    return 0;
}

std::string PolynomialRing::render_monomial(const Monomial& m) const {
    std::string out;
    for (int i = 0; i < num_variables(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars_[static_cast<std::size_t>(i)];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

std::string PolynomialRing::render(const Polynomial& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms_) {
        std::int64_t c = field_.balanced(t.coeff);
        bool negative = c < 0;
        std::uint64_t magnitude = static_cast<std::uint64_t>(negative ? -c : c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (t.monomial.is_one()) {
            out += std::to_string(magnitude);
        } else {
            if (magnitude != 1) out += std::to_string(magnitude) + '*';
            out += render_monomial(t.monomial);
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(const PolynomialRing& ring, std::string_view text) : ring_(ring), text_(text) {}

    Polynomial parse() {
        skip_ws();
        if (pos_ == text_.size()) fail("empty polynomial");
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw PolynomialParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool starts_factor() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Polynomial expr() {
        Polynomial acc = ring_.zero();
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        Polynomial t = product();
        acc = negate ? ring_.sub(acc, t) : ring_.add(acc, t);
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc = ring_.add(acc, product());
            } else if (peek('-')) {
                ++pos_;
                acc = ring_.sub(acc, product());
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = ring_.mul(acc, power());
            } else if (starts_factor()) {
                acc = ring_.mul(acc, power());
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial power() {
        Polynomial base = primary();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            if (pos_ - start > 4) fail("exponent too large");
            unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            if (e > 255) fail("exponent too large");
            return ring_.pow(base, e);
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of polynomial");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            const std::int64_t p = ring_.field().prime();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = (v * 10 + (text_[pos_] - '0')) % p;
                ++pos_;
            }
            return ring_.constant(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto idx = ring_.variable_index(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return ring_.variable(*idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const PolynomialRing& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial PolynomialRing::parse(std::string_view text) const { return PolyParser(*this, text).parse(); }

}  // namespace hyperext

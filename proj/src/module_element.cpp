#include "hyperext/module_element.hpp"

#include <algorithm>

namespace hyperext {

ModuleElement ModuleElement::from_terms(std::vector<ModuleTerm> terms, const ModuleOrder& order,
                                        const PrimeField& field) {
    std::sort(terms.begin(), terms.end(), [&order](const ModuleTerm& a, const ModuleTerm& b) {
        return order.compare(a, b) == std::strong_ordering::greater;
    });
    std::vector<ModuleTerm> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial && out.back().component == t.component) {
            out.back().coeff = field.add(out.back().coeff, t.coeff);
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(t);
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return ModuleElement(std::move(out));
}

bool ModuleElement::single_component() const noexcept {
    for (const auto& t : terms_)
        if (t.component != terms_.front().component) return false;
    return true;
}

ModuleElement ModuleElement::resorted(const ModuleOrder& order) const {
    std::vector<ModuleTerm> t(terms_);
    std::sort(t.begin(), t.end(), [&order](const ModuleTerm& a, const ModuleTerm& b) {
        return order.compare(a, b) == std::strong_ordering::greater;
    });
    return ModuleElement(std::move(t));
}

ModuleElement ModuleArithmetic::sub_multiple(const ModuleElement& a, Coeff c, const Monomial& m,
                                             const ModuleElement& b) const {
    auto at = a.terms();
    auto bt = b.terms();
    std::vector<ModuleTerm> out;
    out.reserve(at.size() + bt.size());
    Coeff negc = field_.neg(c);
    std::size_t i = 0, j = 0;
    while (j < bt.size()) {
        ModuleTerm t{bt[j].monomial * m, bt[j].component, field_.mul(bt[j].coeff, negc)};
        while (i < at.size() && order_.compare(at[i], t) == std::strong_ordering::greater) out.push_back(at[i++]);
        if (i < at.size() && at[i].monomial == t.monomial && at[i].component == t.component) {
            Coeff s = field_.add(at[i].coeff, t.coeff);
            if (s != 0) out.push_back(ModuleTerm{t.monomial, t.component, s});
            ++i;
        } else if (t.coeff != 0) {
            out.push_back(t);
        }
        ++j;
    }
    while (i < at.size()) out.push_back(at[i++]);
    return ModuleElement(std::move(out));
}

ModuleElement ModuleArithmetic::add(const ModuleElement& a, const ModuleElement& b) const {
    return sub_multiple(a, field_.neg(1), Monomial{}, b);
}

ModuleElement ModuleArithmetic::scale(const ModuleElement& a, Coeff c) const {
    if (c == 0) return ModuleElement{};
    std::vector<ModuleTerm> t(a.terms().begin(), a.terms().end());
    for (auto& x : t) x.coeff = field_.mul(x.coeff, c);
    return ModuleElement(std::move(t));
}

ModuleElement ModuleArithmetic::make_monic(const ModuleElement& a) const {
    if (a.is_zero() || a.lead().coeff == 1) return a;
    return scale(a, field_.inv(a.lead().coeff));
}

}  // namespace hyperext

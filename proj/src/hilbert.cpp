#include "hyperext/hilbert.hpp"

#include <algorithm>

namespace hyperext {

namespace {

using Poly = std::vector<std::int64_t>;

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    gens = std::move(out);
}

Poly sub_shifted(Poly a, const Poly& b, int shift, int sign) {
    if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k + static_cast<std::size_t>(shift)] += sign * b[k];
    return a;
}

/// Numerator of the Hilbert series of Q / (gens), by pivoting on variable powers.
Poly series_numerator(std::vector<Monomial> gens) {
    minimalize(gens);
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {0};

    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].coprime(gens[j])) {
                coprime = false;
                break;
            }
    if (coprime) {
        Poly acc{1};
        for (const auto& g : gens) acc = sub_shifted(acc, acc, g.degree(), -1);
        return acc;
    }

    // Pivot on the variable shared by the most generators, at its smallest
    // positive exponent among them.
    int best_var = -1, best_count = 0;
    for (int v = 0; v < kMaxVariables; ++v) {
        int count = 0;
        for (const auto& g : gens) count += g[v] > 0 ? 1 : 0;
        if (count > best_count) {
            best_count = count;
            best_var = v;
        }
    }
    int e = 256;
    for (const auto& g : gens)
        if (g[best_var] > 0) e = std::min(e, g[best_var]);
    Monomial pivot = Monomial::variable(best_var, e);

    std::vector<Monomial> with_pivot = gens;
    with_pivot.push_back(pivot);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(g.quotient(g.gcd(pivot)));

    // H(I) = H(I + p) + t^deg(p) H(I : p)
    Poly a = series_numerator(std::move(with_pivot));
    Poly b = series_numerator(std::move(colon));
    return sub_shifted(std::move(a), b, e, +1);
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

MonomialQuotientSeries::MonomialQuotientSeries(std::vector<Monomial> generators, int nvars)
    : numerator_(series_numerator(std::move(generators))), nvars_(nvars) {
    while (!numerator_.empty() && numerator_.back() == 0) numerator_.pop_back();
    if (numerator_.empty()) {
        dimension_ = -1;
        return;
    }
    // Divide out (1 - t) while it divides the numerator.
    Poly h = numerator_;
    int poles = nvars_;
    while (poles > 0) {
        std::int64_t s = 0;
        for (auto c : h) s += c;
        if (s != 0) break;
        Poly q(h.size() - 1, 0);
        std::int64_t acc = 0;
        for (std::size_t k = 0; k + 1 < h.size(); ++k) {
            acc += h[k];
            q[k] = acc;
        }
        h = std::move(q);
        --poles;
    }
    dimension_ = poles;
    if (poles == 0)
        for (auto c : h) total_ += c;
}

std::int64_t MonomialQuotientSeries::value(int d) const {
    if (d < 0) return 0;
    std::int64_t v = 0;
    for (std::size_t k = 0; k < numerator_.size() && static_cast<int>(k) <= d; ++k)
        v += numerator_[k] * binomial(d - static_cast<std::int64_t>(k) + nvars_ - 1, nvars_ - 1);
    return v;
}

}  // namespace hyperext

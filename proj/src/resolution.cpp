#include "hyperext/resolution.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "hyperext/errors.hpp"
#include "hyperext/linalg.hpp"

namespace hyperext {

BettiTable::BettiTable(const std::vector<std::vector<int>>& module_degrees) {
    for (const auto& degs : module_degrees) {
        ranks_.push_back(static_cast<int>(degs.size()));
        std::map<int, int> g;
        for (int d : degs) ++g[d];
        graded_.push_back(std::move(g));
    }
}

int BettiTable::rank(int i) const {
    return i >= 0 && i < static_cast<int>(ranks_.size()) ? ranks_[static_cast<std::size_t>(i)] : 0;
}

int BettiTable::graded(int i, int d) const {
    if (i < 0 || i >= static_cast<int>(graded_.size())) return 0;
    auto it = graded_[static_cast<std::size_t>(i)].find(d);
    return it == graded_[static_cast<std::size_t>(i)].end() ? 0 : it->second;
}

std::string BettiTable::render() const {
    if (ranks_.empty()) return "total: 0\n";
    int lo = 0, hi = 0;
    bool any = false;
    for (std::size_t i = 0; i < graded_.size(); ++i)
        for (const auto& [d, c] : graded_[i]) {
            int row = d - static_cast<int>(i);
            if (!any) lo = hi = row;
            lo = std::min(lo, row);
            hi = std::max(hi, row);
            any = true;
        }
    std::vector<std::size_t> width(ranks_.size());
    for (std::size_t i = 0; i < ranks_.size(); ++i)
        width[i] = std::max(std::to_string(i).size(), std::to_string(ranks_[i]).size());
    std::ostringstream out;
    std::size_t label = std::max<std::size_t>(6, std::to_string(hi).size() + 1);
    label = std::max(label, std::to_string(lo).size() + 1);
    auto row = [&](const std::string& name, auto cell) {
        out << std::setw(static_cast<int>(label)) << name;
        for (std::size_t i = 0; i < ranks_.size(); ++i) out << ' ' << std::setw(static_cast<int>(width[i])) << cell(i);
        out << '\n';
    };
    row("", [](std::size_t i) { return std::to_string(i); });
    row("total:", [&](std::size_t i) { return std::to_string(ranks_[i]); });
    if (any)
        for (int r = lo; r <= hi; ++r)
            row(std::to_string(r) + ":", [&](std::size_t i) {
                int c = graded(static_cast<int>(i), r + static_cast<int>(i));
                return c == 0 ? std::string(".") : std::to_string(c);
            });
    return out.str();
}

namespace {

std::vector<Polynomial> product_entries(const GradedFreeMap& X, const GradedFreeMap& Y, const PolynomialRing& P) {
    std::vector<Polynomial> out;
    out.reserve(X.rows() * Y.cols());
    for (std::size_t i = 0; i < X.rows(); ++i)
        for (std::size_t j = 0; j < Y.cols(); ++j) {
            Polynomial acc = P.zero();
            for (std::size_t k = 0; k < X.cols(); ++k) acc = P.add(acc, P.mul(X.entry(i, k), Y.entry(k, j)));
            out.push_back(std::move(acc));
        }
    return out;
}

bool is_scalar_multiple_of_identity(const std::vector<Polynomial>& e, std::size_t n, const Polynomial& f) {
    if (e.size() != n * n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial& x = e[i * n + j];
            if (i == j ? !(x == f) : !x.is_zero()) return false;
        }
    return true;
}

std::vector<int> shifted(std::vector<int> v, int e) {
    for (int& d : v) d += e;
    return v;
}

}  // namespace

bool MatrixFactorization::verify() const {
    const auto& P = A.ring()->polys();
    std::size_t n = A.rows();
    if (A.cols() != n || B.rows() != n || B.cols() != n) return false;
    if (A.ring()->is_hypersurface() || B.ring()->is_hypersurface()) return false;
    return is_scalar_multiple_of_identity(product_entries(A, B, P), n, f) &&
           is_scalar_multiple_of_identity(product_entries(B, A, P), n, f);
}

MatrixFactorization MatrixFactorization::swapped() const {
    int e = *f.homogeneous_degree();
    GradedFreeMap shiftedA(A.ring(), shifted(A.target_degrees(), e), shifted(A.source_degrees(), e), A.entries());
    return MatrixFactorization{B, std::move(shiftedA), f};
}

FreeResolution::FreeResolution(RingPtr ring, std::vector<int> f0_degrees, std::vector<GradedFreeMap> differentials,
                               bool terminated)
    : ring_(std::move(ring)), f0_(std::move(f0_degrees)), diffs_(std::move(differentials)), terminated_(terminated) {
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        const auto& expect = i == 0 ? f0_ : diffs_[i - 1].source_degrees();
        if (diffs_[i].target_degrees() != expect) throw std::invalid_argument("differentials do not chain");
    }
}

std::vector<int> FreeResolution::module_degrees(int i) const {
    if (i == 0) return f0_;
    if (i < 0 || i > length()) return {};
    return diffs_[static_cast<std::size_t>(i - 1)].source_degrees();
}

BettiTable FreeResolution::betti() const {
    std::vector<std::vector<int>> mods;
    for (int i = 0; i <= length(); ++i) mods.push_back(module_degrees(i));
    while (mods.size() > 1 && mods.back().empty()) mods.pop_back();
    return BettiTable(mods);
}

bool FreeResolution::minimal() const {
    return std::none_of(diffs_.begin(), diffs_.end(), [](const GradedFreeMap& d) { return d.find_unit_entry(); });
}

std::optional<int> FreeResolution::projective_dimension() const {
    if (!terminated_) return std::nullopt;
    int L = length();
    while (L > 0 && module_degrees(L).empty()) --L;
    if (L == 0 && f0_.empty()) return -1;
    return L;
}

bool FreeResolution::is_complex() const {
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
        if (!diffs_[i].compose(diffs_[i + 1]).is_zero()) return false;
    return true;
}

void FreeResolution::set_periodicity(PeriodicityCertificate cert, MatrixFactorization mf) {
    certificate_ = std::move(cert);
    factorization_ = std::move(mf);
}

namespace {

/// Standard monomials of degree d in the ring (those not divisible by the
/// leading monomial of f).
std::vector<Monomial> basis_monomials(const RingContext& ring, int d) {
    auto all = monomials_of_degree(ring.num_variables(), d);
    if (!ring.is_hypersurface()) return all;
    const Monomial& lead = ring.hypersurface()->leading_term().monomial;
    std::erase_if(all, [&](const Monomial& m) { return lead.divides(m); });
    return all;
}

struct Unknown {
    bool upper;
    std::size_t row, col;
    Monomial monomial;
};

/// Solves lower * d_{i+2} = d_i * upper (mod f) for graded isomorphisms.
std::optional<PeriodMatch> match_at(const FreeResolution& res, const RingContext& ring, int i) {
    const int e = ring.relation_degree();
    const auto& P = ring.polys();
    const auto& F = ring.field();
    const GradedFreeMap& di = res.differential(i);
    const GradedFreeMap& dii = res.differential(i + 2);
    std::vector<int> lower_tgt = shifted(res.module_degrees(i - 1), e), lower_src = res.module_degrees(i + 1);
    std::vector<int> upper_tgt = shifted(res.module_degrees(i), e), upper_src = res.module_degrees(i + 2);

    std::vector<Unknown> unknowns;
    for (std::size_t a = 0; a < lower_tgt.size(); ++a)
        for (std::size_t c = 0; c < lower_src.size(); ++c)
            for (const auto& m : basis_monomials(ring, lower_src[c] - lower_tgt[a])) unknowns.push_back({false, a, c, m});
    for (std::size_t b = 0; b < upper_tgt.size(); ++b)
        for (std::size_t c = 0; c < upper_src.size(); ++c)
            for (const auto& m : basis_monomials(ring, upper_src[c] - upper_tgt[b])) unknowns.push_back({true, b, c, m});

    // Equation rows are keyed by (row of F_{i-1}, column of F_{i+2}, monomial).
    std::map<std::tuple<std::size_t, std::size_t, std::vector<int>>, std::size_t> eq_index;
    std::vector<std::vector<std::pair<std::size_t, Coeff>>> columns(unknowns.size());
    auto add_poly = [&](std::size_t col, std::size_t r, std::size_t c, const Polynomial& p, bool negate) {
        Polynomial reduced = ring.reduce(p);
        for (const auto& t : reduced.terms()) {
            std::vector<int> key(static_cast<std::size_t>(ring.num_variables()));
            for (int v = 0; v < ring.num_variables(); ++v) key[static_cast<std::size_t>(v)] = t.monomial[v];
            auto [it, fresh] = eq_index.try_emplace({r, c, std::move(key)}, eq_index.size());
            columns[col].push_back({it->second, negate ? F.neg(t.coeff) : t.coeff});
        }
    };
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const Unknown& x = unknowns[u];
        if (!x.upper) {
            for (std::size_t b = 0; b < dii.cols(); ++b)
                add_poly(u, x.row, b, P.mul_term(dii.entry(x.col, b), x.monomial, 1), false);
        } else {
            for (std::size_t a = 0; a < di.rows(); ++a)
                add_poly(u, a, x.col, P.mul_term(di.entry(a, x.row), x.monomial, 1), true);
        }
    }
    DenseMatrix system(eq_index.size(), unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        for (auto [r, c] : columns[u]) system.at(r, u) = F.add(system.at(r, u), c);
    auto kernel = nullspace(std::move(system), F);
    if (kernel.empty()) return std::nullopt;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i));
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Coeff> sol(unknowns.size(), 0);
        for (const auto& v : kernel) {
            Coeff r = static_cast<Coeff>(rng() % F.prime());
            for (std::size_t u = 0; u < sol.size(); ++u) sol[u] = F.add(sol[u], F.mul(r, v[u]));
        }
        DenseMatrix low0(lower_tgt.size(), lower_src.size()), up0(upper_tgt.size(), upper_src.size());
        std::vector<std::vector<Term>> low_terms(lower_tgt.size() * lower_src.size()),
            up_terms(upper_tgt.size() * upper_src.size());
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            if (sol[u] == 0) continue;
            const Unknown& x = unknowns[u];
            if (x.upper) {
                up_terms[x.row * upper_src.size() + x.col].push_back({x.monomial, sol[u]});
                if (x.monomial.is_one()) up0.at(x.row, x.col) = sol[u];
            } else {
                low_terms[x.row * lower_src.size() + x.col].push_back({x.monomial, sol[u]});
                if (x.monomial.is_one()) low0.at(x.row, x.col) = sol[u];
            }
        }
        if (!inverse(low0, F) || !inverse(up0, F)) continue;
        auto build = [&](std::vector<int> tgt, std::vector<int> src, std::vector<std::vector<Term>>& terms) {
            std::vector<Polynomial> entries;
            for (auto& t : terms) entries.push_back(P.from_terms(std::move(t)));
            return GradedFreeMap(res.ring(), std::move(tgt), std::move(src), std::move(entries));
        };
        return PeriodMatch{i, build(lower_tgt, lower_src, low_terms), build(upper_tgt, upper_src, up_terms)};
    }
    return std::nullopt;
}

bool betti_shift_match(const FreeResolution& res, int i, int e) {
    auto a = res.module_degrees(i);
    auto b = res.module_degrees(i + 2);
    if (a.size() != b.size() || a.empty()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < a.size(); ++k)
        if (b[k] != a[k] + e) return false;
    return true;
}

GradedFreeMap negated(const GradedFreeMap& m) {
    const auto& P = m.ring()->polys();
    std::vector<Polynomial> e;
    for (const auto& x : m.entries()) e.push_back(P.neg(x));
    return GradedFreeMap(m.ring(), m.target_degrees(), m.source_degrees(), std::move(e));
}

/// Inverse of a graded automorphism-like map H : S -> T of equal rank,
/// expanded around its scalar part.
std::optional<GradedFreeMap> graded_inverse(const GradedFreeMap& H) {
    const auto& P = H.ring()->polys();
    const auto& F = H.ring()->field();
    std::size_t n = H.rows();
    if (H.cols() != n) return std::nullopt;
    DenseMatrix h0(n, n);
    std::vector<Polynomial> rest;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial& x = H.entry(i, j);
            if (!x.is_zero() && x.is_constant()) {
                h0.at(i, j) = x.leading_term().coeff;
                rest.push_back(P.zero());
            } else {
                rest.push_back(x);
            }
        }
    auto inv0 = inverse(h0, F);
    if (!inv0) return std::nullopt;
    std::vector<Polynomial> ie;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ie.push_back(P.constant(inv0->at(i, j)));
    GradedFreeMap H0inv(H.ring(), H.source_degrees(), H.target_degrees(), std::move(ie));
    GradedFreeMap N(H.ring(), H.target_degrees(), H.source_degrees(), std::move(rest));
    GradedFreeMap step = negated(H0inv.compose(N));
    GradedFreeMap term = H0inv;
    GradedFreeMap acc = H0inv;
    for (std::size_t k = 0; k <= 64; ++k) {
        term = step.compose(term);
        if (term.is_zero()) return acc;
        acc = acc.add(term);
    }
    return std::nullopt;
}

}  // namespace

std::optional<PeriodicityCertificate> detect_periodicity(const FreeResolution& res, const RingContext& ring) {
    if (!ring.is_hypersurface() || res.terminated()) return std::nullopt;
    const int e = ring.relation_degree();
    const int L = res.length();
    // Differential indices i with d_{i+2} stored.
    int top = L - 2;
    if (top < 2) return std::nullopt;
    int betti_start = top + 1;
    while (betti_start - 1 >= 1 && betti_shift_match(res, betti_start - 2, e) && betti_shift_match(res, betti_start - 1, e))
        --betti_start;
    PeriodicityCertificate cert{top + 1, {}};
    for (int i = top; i >= betti_start; --i) {
        auto m = match_at(res, ring, i);
        if (!m) break;
        cert.matches.insert(cert.matches.begin(), std::move(*m));
        cert.start = i;
    }
    if (cert.matches.size() < 2) return std::nullopt;
    return cert;
}

MatrixFactorization lift_matrix_factorization(const FreeResolution& res, const PeriodicityCertificate& cert,
                                              const RingContext& ring) {
    if (!ring.is_hypersurface()) throw std::invalid_argument("matrix factorizations need a hypersurface");
    const int s = cert.start;
    if (s < 1 || s + 1 > res.length()) throw EngineBug("periodicity certificate outside the computed window");
    RingPtr Q = ring.ambient();
    const Polynomial& f = *ring.hypersurface();
    const auto& P = Q->polys();
    const int e = ring.relation_degree();
    GradedFreeMap A = res.differential(s).over(Q);
    GradedFreeMap Bt = res.differential(s + 1).over(Q);
    if (A.rows() != A.cols() || Bt.rows() != Bt.cols() || A.rows() != Bt.rows())
        throw EngineBug("periodic differentials are not square of equal size");
    std::vector<Polynomial> h;
    for (auto& x : product_entries(A, Bt, P)) {
        auto [q, r] = P.divide(x, f);
        if (!r.is_zero()) throw EngineBug("lifted differentials do not compose to a multiple of f");
        h.push_back(std::move(q));
    }
    GradedFreeMap H(Q, shifted(A.target_degrees(), e), Bt.source_degrees(), std::move(h));
    auto Hinv = graded_inverse(H);
    if (!Hinv) throw EngineBug("correction matrix of the factorization lift is not invertible");
    MatrixFactorization mf{A, Bt.compose(*Hinv), f};
    if (!mf.verify()) throw EngineBug("matrix factorization identity fails after lifting");
    return mf;
}

FreeResolution minimal_resolution(const PresentedModule& M, std::optional<int> length_cap) {
    const RingPtr& ring = M.ring();
    int cap = length_cap.value_or(ring->default_length_cap());
    if (cap < 1) throw std::invalid_argument("length cap must be at least 1");
    GradedFreeMap P = minimal_presentation(M).presentation();
    std::vector<int> f0 = P.target_degrees();
    if (f0.empty()) return FreeResolution(ring, {}, {}, true);
    std::vector<GradedFreeMap> diffs;
    bool terminated = false;
    if (P.cols() == 0) {
        terminated = true;
    } else {
        diffs.push_back(std::move(P));
        while (static_cast<int>(diffs.size()) < cap) {
            GradedFreeMap next = syzygies(diffs.back());
            if (next.cols() == 0) {
                terminated = true;
                break;
            }
            diffs.push_back(std::move(next));
        }
    }
    FreeResolution res(ring, std::move(f0), std::move(diffs), terminated);
    if (terminated) return res;
    if (ring->is_hypersurface()) {
        if (auto cert = detect_periodicity(res, *ring)) {
            MatrixFactorization mf = lift_matrix_factorization(res, *cert, *ring);
            res.set_periodicity(std::move(*cert), std::move(mf));
            return res;
        }
    }
    if (syzygies(res.differentials().back()).cols() == 0)
        return FreeResolution(ring, res.module_degrees(0), res.differentials(), true);
    return res;
}

FreeResolution minimize(const FreeResolution& res) {
    std::vector<int> f0 = res.module_degrees(0);
    std::vector<GradedFreeMap> d = res.differentials();
    const RingPtr& ring = res.ring();
    const auto& P = ring->polys();
    const auto& F = ring->field();

    auto drop_row = [&](const GradedFreeMap& m, std::size_t r) {
        std::vector<int> tgt;
        std::vector<Polynomial> e;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            tgt.push_back(m.target_degrees()[i]);
            for (std::size_t j = 0; j < m.cols(); ++j) e.push_back(m.entry(i, j));
        }
        return GradedFreeMap(ring, std::move(tgt), m.source_degrees(), std::move(e));
    };
    auto drop_col = [&](const GradedFreeMap& m, std::size_t c) {
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (j != c) keep.push_back(j);
        return m.select_columns(keep);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < d.size(); ++k) {
            auto unit = d[k].find_unit_entry();
            if (!unit) continue;
            auto [r, c] = *unit;
            const GradedFreeMap& A = d[k];
            Coeff u_inv = F.inv(P.constant_coefficient(A.entry(r, c)));
            std::vector<int> tgt, src;
            for (std::size_t i = 0; i < A.rows(); ++i)
                if (i != r) tgt.push_back(A.target_degrees()[i]);
            for (std::size_t j = 0; j < A.cols(); ++j)
                if (j != c) src.push_back(A.source_degrees()[j]);
            std::vector<Polynomial> e;
            for (std::size_t i = 0; i < A.rows(); ++i) {
                if (i == r) continue;
                for (std::size_t j = 0; j < A.cols(); ++j) {
                    if (j == c) continue;
                    e.push_back(P.sub(A.entry(i, j), P.scale(P.mul(A.entry(r, j), A.entry(i, c)), u_inv)));
                }
            }
            d[k] = GradedFreeMap(ring, std::move(tgt), std::move(src), std::move(e));
            if (k + 1 < d.size()) d[k + 1] = drop_row(d[k + 1], c);
            if (k > 0)
                d[k - 1] = drop_col(d[k - 1], r);
            else
                f0.erase(f0.begin() + static_cast<std::ptrdiff_t>(r));
            changed = true;
            break;
        }
    }
    bool terminated = res.terminated();
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k].cols() == 0) {
            d.erase(d.begin() + static_cast<std::ptrdiff_t>(k), d.end());
            terminated = true;
            break;
        }
    }
    if (f0.empty()) d.clear();
    return FreeResolution(ring, std::move(f0), std::move(d), terminated);
}

}  // namespace hyperext

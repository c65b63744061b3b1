#include "oracle.hpp"

#include <algorithm>
#include <map>

namespace oracle {

using hyperext::Coeff;
using hyperext::GradedFreeMap;
using hyperext::Monomial;
using hyperext::Polynomial;
using hyperext::PrimeField;

namespace {

using SparseVec = std::vector<std::pair<std::uint32_t, Coeff>>;

std::vector<Monomial> monomials(int nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    // Odometer over exponent vectors with sum d.
    auto emit = [&] { out.emplace_back(e); };
    if (nvars == 0) {
        if (d == 0) emit();
        return out;
    }
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == nvars - 1) {
            e[static_cast<std::size_t>(v)] = left;
            emit();
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(v)] = k;
            self(self, v + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// Coordinates of the degree-d piece of a graded free module over Q.
class Coordinates {
public:
    Coordinates(const std::vector<int>& degrees, int d, int nvars) {
        for (std::size_t c = 0; c < degrees.size(); ++c)
            for (const auto& m : monomials(nvars, d - degrees[c])) {
                index_.emplace(std::make_pair(c, key(m, nvars)), size_);
                ++size_;
            }
        nvars_ = nvars;
    }
    std::uint32_t size() const { return size_; }
    std::uint32_t at(std::size_t comp, const Monomial& m) const { return index_.at({comp, key(m, nvars_)}); }

private:
    static std::vector<int> key(const Monomial& m, int nvars) {
        std::vector<int> k(static_cast<std::size_t>(nvars));
        for (int i = 0; i < nvars; ++i) k[static_cast<std::size_t>(i)] = m[i];
        return k;
    }
    std::map<std::pair<std::size_t, std::vector<int>>, std::uint32_t> index_;
    std::uint32_t size_ = 0;
    int nvars_ = 0;
};

/// Incremental row echelon form over F_p with sparse rows.
class Echelon {
public:
    explicit Echelon(const PrimeField& F) : F_(F) {}

    void insert(SparseVec v) {
        std::sort(v.begin(), v.end());
        while (!v.empty()) {
            auto it = rows_.find(v.front().first);
            if (it == rows_.end()) {
                Coeff inv = F_.inv(v.front().second);
                for (auto& [i, c] : v) c = F_.mul(c, inv);
                rows_.emplace(v.front().first, std::move(v));
                return;
            }
            v = axpy(v, F_.neg(v.front().second), it->second);
        }
    }
    std::size_t rank() const { return rows_.size(); }

private:
    SparseVec axpy(const SparseVec& a, Coeff c, const SparseVec& b) const {
        SparseVec out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.push_back({b[j].first, F_.mul(c, b[j].second)});
                ++j;
            } else {
                Coeff s = F_.add(a[i].second, F_.mul(c, b[j].second));
                if (s != 0) out.push_back({a[i].first, s});
                ++i, ++j;
            }
        }
        return out;
    }
    const PrimeField& F_;
    std::map<std::uint32_t, SparseVec> rows_;
};

/// m * column j of A, in coordinates of the target in degree d.
SparseVec image_of(const GradedFreeMap& A, std::size_t j, const Monomial& m, const Coordinates& coords) {
    const auto& P = A.ring()->polys();
    std::map<std::uint32_t, Coeff> acc;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Polynomial t = P.mul_term(A.entry(i, j), m, 1);
        for (const auto& term : t.terms()) {
            auto& slot = acc[coords.at(i, term.monomial)];
            slot = P.field().add(slot, term.coeff);
        }
    }
    SparseVec out;
    for (auto [k, c] : acc)
        if (c != 0) out.push_back({k, c});
    return out;
}

/// Inserts the degree-d relations of the module presented by B (+ f F).
void add_relations(Echelon& e, const GradedFreeMap& B, int d, const Coordinates& coords) {
    const auto& ring = *B.ring();
    int n = ring.num_variables();
    for (std::size_t j = 0; j < B.cols(); ++j)
        for (const auto& m : monomials(n, d - B.source_degrees()[j])) e.insert(image_of(B, j, m, coords));
    if (!ring.is_hypersurface()) return;
    const Polynomial& f = *ring.hypersurface();
    int ef = ring.relation_degree();
    const auto& P = ring.polys();
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (const auto& m : monomials(n, d - ef - B.target_degrees()[i])) {
            SparseVec v;
            Polynomial fm = P.mul_term(f, m, 1);
            for (const auto& t : fm.terms()) v.push_back({coords.at(i, t.monomial), t.coeff});
            e.insert(std::move(v));
        }
}

}  // namespace

std::int64_t hilbert_value(const hyperext::PresentedModule& M, int d) {
    const GradedFreeMap& A = M.presentation();
    Coordinates coords(A.target_degrees(), d, M.ring()->num_variables());
    Echelon e(M.ring()->field());
    add_relations(e, A, d, coords);
    return static_cast<std::int64_t>(coords.size()) - static_cast<std::int64_t>(e.rank());
}

std::vector<std::int64_t> hilbert_window(const hyperext::PresentedModule& M, int lo, int hi) {
    std::vector<std::int64_t> out;
    for (int d = lo; d <= hi; ++d) out.push_back(hilbert_value(M, d));
    return out;
}

std::int64_t homology_value(const hyperext::ModuleMap& incoming, const hyperext::ModuleMap& outgoing, int d) {
    const auto& ring = *incoming.target.ring();
    int n = ring.num_variables();
    const GradedFreeMap& phi = incoming.matrix;
    const GradedFreeMap& psi = outgoing.matrix;
    const GradedFreeMap& BY = incoming.target.presentation();
    const GradedFreeMap& BZ = outgoing.target.presentation();
    Coordinates y0(BY.target_degrees(), d, n);
    Coordinates z0(BZ.target_degrees(), d, n);

    // dim H_d = dim Y0_d - rank[psi | LZ] + rank LZ - rank[phi | LY]
    Echelon lz(ring.field());
    add_relations(lz, BZ, d, z0);
    std::size_t rank_lz = lz.rank();
    Echelon psi_lz = lz;
    for (std::size_t j = 0; j < psi.cols(); ++j)
        for (const auto& m : monomials(n, d - psi.source_degrees()[j])) psi_lz.insert(image_of(psi, j, m, z0));
    Echelon phi_ly(ring.field());
    add_relations(phi_ly, BY, d, y0);
    for (std::size_t j = 0; j < phi.cols(); ++j)
        for (const auto& m : monomials(n, d - phi.source_degrees()[j])) phi_ly.insert(image_of(phi, j, m, y0));
    return static_cast<std::int64_t>(y0.size()) - static_cast<std::int64_t>(psi_lz.rank()) +
           static_cast<std::int64_t>(rank_lz) - static_cast<std::int64_t>(phi_ly.rank());
}

std::vector<std::int64_t> homology_window(const hyperext::ModuleMap& incoming, const hyperext::ModuleMap& outgoing,
                                          int lo, int hi) {
    std::vector<std::int64_t> out;
    for (int d = lo; d <= hi; ++d) out.push_back(homology_value(incoming, outgoing, d));
    return out;
}

bool composes_to_zero(const hyperext::ModuleMap& incoming, const hyperext::ModuleMap& outgoing, int lo, int hi) {
    const auto& ring = *incoming.target.ring();
    int n = ring.num_variables();
    const auto& P = ring.polys();
    const GradedFreeMap& phi = incoming.matrix;
    const GradedFreeMap& psi = outgoing.matrix;
    const GradedFreeMap& BZ = outgoing.target.presentation();
    for (int d = lo; d <= hi; ++d) {
        Coordinates z0(BZ.target_degrees(), d, n);
        Echelon lz(ring.field());
        add_relations(lz, BZ, d, z0);
        for (std::size_t j = 0; j < phi.cols(); ++j) {
            if (phi.source_degrees()[j] != d) continue;
            std::vector<Polynomial> col;
            for (std::size_t i = 0; i < psi.rows(); ++i) {
                Polynomial acc = P.zero();
                for (std::size_t k = 0; k < psi.cols(); ++k) acc = P.add(acc, P.mul(psi.entry(i, k), phi.entry(k, j)));
                col.push_back(acc);
            }
            SparseVec v;
            for (std::size_t i = 0; i < col.size(); ++i)
                for (const auto& t : col[i].terms()) v.push_back({z0.at(i, t.monomial), t.coeff});
            Echelon probe = lz;
            std::size_t before = probe.rank();
            probe.insert(std::move(v));
            if (probe.rank() != before) return false;
        }
    }
    return true;
}

}  // namespace oracle

#include "hyperext/module.hpp"

#include <algorithm>
#include <mutex>

#include "hyperext/errors.hpp"
#include "hyperext/hilbert.hpp"

namespace hyperext {

namespace {

GradedFreeMap hconcat(const GradedFreeMap& a, const GradedFreeMap& b) {
    if (a.target_degrees() != b.target_degrees()) throw std::invalid_argument("hconcat: targets differ");
    std::vector<int> src = a.source_degrees();
    src.insert(src.end(), b.source_degrees().begin(), b.source_degrees().end());
    std::vector<Polynomial> e;
    e.reserve(a.rows() * src.size());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) e.push_back(a.entry(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) e.push_back(b.entry(i, j));
    }
    return GradedFreeMap(a.ring(), a.target_degrees(), std::move(src), std::move(e));
}

bool zero_dimensional(const std::vector<Monomial>& leads, int nvars) {
    std::vector<bool> seen(static_cast<std::size_t>(nvars), false);
    for (const auto& m : leads) {
        if (m.is_one()) return true;
        if (auto v = m.pure_power_variable()) seen[static_cast<std::size_t>(*v)] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

struct PresentedModule::Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> basis;
    std::vector<MonomialQuotientSeries> series;
    bool finite_length = true;
};

PresentedModule::PresentedModule(GradedFreeMap presentation)
    : presentation_(std::move(presentation)), cache_(std::make_shared<Cache>()) {}

PresentedModule PresentedModule::free(RingPtr ring, std::vector<int> degrees) {
    return PresentedModule(GradedFreeMap::zero(std::move(ring), std::move(degrees), {}));
}

PresentedModule PresentedModule::zero(RingPtr ring) { return free(std::move(ring), {}); }

const PresentedModule::Cache& PresentedModule::cache() const {
    std::call_once(cache_->once, [this] {
        const RingContext& ring = *presentation_.ring();
        ModuleOrder order = graded_order(ring, presentation_.target_degrees());
        std::vector<ModuleElement> cols = presentation_.columns(order);
        cache_->basis = std::make_unique<GroebnerBasis>(buchberger(ring, order, cols));
        for (std::size_t c = 0; c < num_generators(); ++c) {
            auto leads = cache_->basis->leading_monomials(static_cast<std::uint32_t>(c));
            if (!zero_dimensional(leads, ring.num_variables())) cache_->finite_length = false;
            cache_->series.emplace_back(std::move(leads), ring.num_variables());
        }
    });
    return *cache_;
}

const GroebnerBasis& PresentedModule::relation_basis() const { return *cache().basis; }

bool PresentedModule::is_zero() const {
    for (const auto& s : cache().series)
        if (s.dimension() >= 0) return false;
    return true;
}

std::int64_t PresentedModule::hilbert_value(int d) const {
    const auto& c = cache();
    std::int64_t v = 0;
    for (std::size_t i = 0; i < c.series.size(); ++i) v += c.series[i].value(d - generator_degrees()[i]);
    return v;
}

std::vector<std::int64_t> PresentedModule::hilbert_window(int lo, int hi) const {
    std::vector<std::int64_t> out;
    for (int d = lo; d <= hi; ++d) out.push_back(hilbert_value(d));
    return out;
}

std::vector<std::int64_t> PresentedModule::hilbert_function(int d_max) const { return hilbert_window(0, d_max); }

Length PresentedModule::length() const {
    const auto& c = cache();
    if (!c.finite_length) return Length::infinite();
    std::int64_t total = 0;
    for (const auto& s : c.series) total += s.total();
    return Length::finite(total);
}

int PresentedModule::krull_dimension() const {
    int d = -1;
    for (const auto& s : cache().series) d = std::max(d, s.dimension());
    return d;
}

int PresentedModule::min_generator_degree() const noexcept {
    const auto& g = generator_degrees();
    return g.empty() ? 0 : *std::min_element(g.begin(), g.end());
}

std::vector<std::int64_t> hilbert_function(const PresentedModule& M, int d_max) { return M.hilbert_function(d_max); }
Length length(const PresentedModule& M) { return M.length(); }

PresentedModule kernel(const GradedFreeMap& m) {
    GradedFreeMap gens = syzygies(m);
    return PresentedModule(syzygies(gens));
}

PresentedModule cokernel(const GradedFreeMap& m) { return PresentedModule(m); }

PresentedModule minimal_presentation(const PresentedModule& M) {
    GradedFreeMap A = M.presentation();
    const auto& P = A.ring()->polys();
    const auto& F = A.ring()->field();
    while (true) {
        A = minimal_image_generators(A);
        auto unit = A.find_unit_entry();
        if (!unit) break;
        auto [r, c] = *unit;
        Coeff u_inv = F.inv(P.constant_coefficient(A.entry(r, c)));
        std::vector<int> tgt, src;
        for (std::size_t i = 0; i < A.rows(); ++i)
            if (i != r) tgt.push_back(A.target_degrees()[i]);
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (j != c) src.push_back(A.source_degrees()[j]);
        std::vector<Polynomial> e;
        e.reserve(tgt.size() * src.size());
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < A.cols(); ++j) {
                if (j == c) continue;
                // a_ij - a_rj * a_ic / u
                Polynomial corr = P.scale(P.mul(A.entry(r, j), A.entry(i, c)), u_inv);
                e.push_back(P.sub(A.entry(i, j), corr));
            }
        }
        A = GradedFreeMap(A.ring(), std::move(tgt), std::move(src), std::move(e));
    }
    return PresentedModule(std::move(A));
}

PresentedModule direct_sum_shifted(const PresentedModule& M, const std::vector<int>& shifts) {
    const GradedFreeMap& A = M.presentation();
    std::vector<int> tgt, src;
    for (int s : shifts) {
        for (int d : A.target_degrees()) tgt.push_back(d + s);
        for (int d : A.source_degrees()) src.push_back(d + s);
    }
    std::vector<Polynomial> e(tgt.size() * src.size(), A.ring()->polys().zero());
    std::size_t r = A.rows(), c = A.cols();
    for (std::size_t k = 0; k < shifts.size(); ++k)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) e[(k * r + i) * src.size() + (k * c + j)] = A.entry(i, j);
    return PresentedModule(GradedFreeMap(A.ring(), std::move(tgt), std::move(src), std::move(e)));
}

PresentedModule direct_sum(const PresentedModule& A, const PresentedModule& B) {
    const auto& a = A.presentation();
    const auto& b = B.presentation();
    std::vector<int> tgt = a.target_degrees(), src = a.source_degrees();
    tgt.insert(tgt.end(), b.target_degrees().begin(), b.target_degrees().end());
    src.insert(src.end(), b.source_degrees().begin(), b.source_degrees().end());
    std::vector<Polynomial> e(tgt.size() * src.size(), a.ring()->polys().zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) e[i * src.size() + j] = a.entry(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) e[(a.rows() + i) * src.size() + a.cols() + j] = b.entry(i, j);
    return PresentedModule(GradedFreeMap(a.ring(), std::move(tgt), std::move(src), std::move(e)));
}

PresentedModule tensor_product(const PresentedModule& M, const PresentedModule& N) {
    GradedFreeMap left = kronecker_identity(M.presentation(), N.generator_degrees());
    GradedFreeMap right = direct_sum_shifted(N, M.generator_degrees()).presentation();
    return PresentedModule(hconcat(left, right));
}

PresentedModule shift(const PresentedModule& M, int d) { return direct_sum_shifted(M, {d}); }

ModuleMap tensor_with(const GradedFreeMap& m, const PresentedModule& N) {
    return ModuleMap{direct_sum_shifted(N, m.source_degrees()), direct_sum_shifted(N, m.target_degrees()),
                     kronecker_identity(m, N.generator_degrees())};
}

ModuleMap hom_into(const GradedFreeMap& m, const PresentedModule& N) {
    std::vector<int> neg_t, neg_s;
    for (int d : m.target_degrees()) neg_t.push_back(-d);
    for (int d : m.source_degrees()) neg_s.push_back(-d);
    return ModuleMap{direct_sum_shifted(N, neg_t), direct_sum_shifted(N, neg_s),
                     kronecker_identity(dual_map(m), N.generator_degrees())};
}

ModuleMap zero_map_into(const PresentedModule& Y) {
    return ModuleMap{PresentedModule::zero(Y.ring()), Y, GradedFreeMap::zero(Y.ring(), Y.generator_degrees(), {})};
}

ModuleMap zero_map_from(const PresentedModule& Y) {
    return ModuleMap{Y, PresentedModule::zero(Y.ring()), GradedFreeMap::zero(Y.ring(), {}, Y.generator_degrees())};
}

bool composes_to_zero(const ModuleMap& incoming, const ModuleMap& outgoing) {
    if (incoming.target.generator_degrees() != outgoing.source.generator_degrees())
        throw InvalidComplex("maps are not composable: middle modules differ");
    GradedFreeMap comp = outgoing.matrix.compose(incoming.matrix);
    const GroebnerBasis& gb = outgoing.target.relation_basis();
    for (const auto& col : comp.columns(gb.order()))
        if (!gb.contains(col)) return false;
    return true;
}

namespace {

struct HomologyGenerators {
    std::vector<ModuleElement> elements;
    std::vector<int> degrees;
};

HomologyGenerators homology_generators(const ModuleMap& incoming, const ModuleMap& outgoing) {
    if (!composes_to_zero(incoming, outgoing)) throw InvalidComplex("outgoing o incoming is not zero");
    const PresentedModule& Y = incoming.target;
    const RingContext& ring = *Y.ring();
    ModuleOrder order = graded_order(ring, Y.generator_degrees());
    std::vector<ModuleElement> cycles = kernel_elements(outgoing.matrix, &outgoing.target.presentation());
    std::vector<ModuleElement> boundaries = incoming.matrix.columns(order);
    for (auto& r : Y.presentation().columns(order)) boundaries.push_back(std::move(r));
    std::vector<std::size_t> keep = select_minimal_generators(ring, order, cycles, boundaries);
    HomologyGenerators out;
    for (std::size_t k : keep) {
        out.degrees.push_back(cycles[k].degree(order));
        out.elements.push_back(std::move(cycles[k]));
    }
    return out;
}

}  // namespace

bool homology_vanishes(const ModuleMap& incoming, const ModuleMap& outgoing) {
    return homology_generators(incoming, outgoing).elements.empty();
}

PresentedModule homology_at(const ModuleMap& incoming, const ModuleMap& outgoing) {
    HomologyGenerators gens = homology_generators(incoming, outgoing);
    const PresentedModule& Y = incoming.target;
    const RingPtr& ring = Y.ring();
    if (gens.elements.empty()) return PresentedModule::zero(ring);
    GradedFreeMap cover = GradedFreeMap::from_columns(ring, Y.generator_degrees(), gens.degrees, gens.elements);
    GradedFreeMap boundaries = hconcat(incoming.matrix, Y.presentation());
    std::vector<ModuleElement> rel = kernel_elements(cover, &boundaries);
    ModuleOrder order = graded_order(*ring, gens.degrees);
    std::vector<std::size_t> keep = select_minimal_generators(*ring, order, rel, {});
    std::vector<ModuleElement> cols;
    std::vector<int> degrees;
    for (std::size_t k : keep) {
        degrees.push_back(rel[k].degree(order));
        cols.push_back(std::move(rel[k]));
    }
    return PresentedModule(GradedFreeMap::from_columns(ring, gens.degrees, std::move(degrees), cols));
}

PresentedModule restrict_to_ambient(const PresentedModule& M) {
    RingPtr Q = M.ring()->ambient();
    GradedFreeMap A = M.presentation().over(Q);
    if (!M.ring()->is_hypersurface()) return PresentedModule(A);
    const Polynomial& f = *M.ring()->hypersurface();
    int e = M.ring()->relation_degree();
    std::vector<int> fdeg;
    for (int d : A.target_degrees()) fdeg.push_back(d + e);
    std::size_t r = A.rows();
    std::vector<Polynomial> fe(r * r, Q->polys().zero());
    for (std::size_t i = 0; i < r; ++i) fe[i * r + i] = f;
    return PresentedModule(hconcat(A, GradedFreeMap(Q, A.target_degrees(), std::move(fdeg), std::move(fe))));
}

PresentedModule residue_field(const RingPtr& ring) {
    std::vector<std::vector<Polynomial>> row(1);
    for (int v = 0; v < ring->num_variables(); ++v) row[0].push_back(ring->polys().variable(v));
    return PresentedModule(matrix_with_inferred_sources(ring, {0}, row));
}

}  // namespace hyperext

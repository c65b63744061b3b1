#include "hyperext/free_map.hpp"

#include <stdexcept>
#include <string>

namespace hyperext {

GradedFreeMap::GradedFreeMap(RingPtr ring, std::vector<int> target_degrees, std::vector<int> source_degrees,
                             std::vector<Polynomial> entries)
    : ring_(std::move(ring)), target_(std::move(target_degrees)), source_(std::move(source_degrees)),
      entries_(std::move(entries)) {
    if (!ring_) throw std::invalid_argument("graded free map needs a ring");
    if (entries_.size() != target_.size() * source_.size())
        throw std::invalid_argument("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                                    std::to_string(target_.size()) + "x" + std::to_string(source_.size()));
    for (std::size_t i = 0; i < target_.size(); ++i) {
        for (std::size_t j = 0; j < source_.size(); ++j) {
            Polynomial& e = entries_[i * source_.size() + j];
            if (e.num_variables() != ring_->num_variables()) {
                if (e.is_zero())
                    e = ring_->polys().zero();
                else
                    throw std::invalid_argument("matrix entry lives in a different polynomial ring");
            }
            e = ring_->reduce(e);
            if (e.is_zero()) continue;
            auto d = e.homogeneous_degree();
            int want = source_[j] - target_[i];
            if (!d || *d != want)
                throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                            ring_->polys().render(e) + " is not homogeneous of degree " +
                                            std::to_string(want));
        }
    }
}

GradedFreeMap GradedFreeMap::zero(RingPtr ring, std::vector<int> target_degrees, std::vector<int> source_degrees) {
    std::vector<Polynomial> e(target_degrees.size() * source_degrees.size(), ring->polys().zero());
    return GradedFreeMap(std::move(ring), std::move(target_degrees), std::move(source_degrees), std::move(e));
}

GradedFreeMap GradedFreeMap::identity(RingPtr ring, std::vector<int> degrees) {
    std::size_t n = degrees.size();
    std::vector<Polynomial> e(n * n, ring->polys().zero());
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = ring->polys().one();
    return GradedFreeMap(ring, degrees, degrees, std::move(e));
}

GradedFreeMap GradedFreeMap::from_columns(RingPtr ring, std::vector<int> target_degrees,
                                          std::vector<int> source_degrees, std::span<const ModuleElement> columns) {
    if (columns.size() != source_degrees.size()) throw std::invalid_argument("column count mismatch");
    std::size_t r = target_degrees.size(), c = columns.size();
    std::vector<std::vector<Term>> buckets(r * c);
    for (std::size_t j = 0; j < c; ++j)
        for (const auto& t : columns[j].terms()) {
            if (t.component >= r) throw std::invalid_argument("module element outside the target free module");
            buckets[t.component * c + j].push_back(Term{t.monomial, t.coeff});
        }
    std::vector<Polynomial> e;
    e.reserve(r * c);
    for (auto& b : buckets) e.push_back(ring->polys().from_terms(std::move(b)));
    return GradedFreeMap(std::move(ring), std::move(target_degrees), std::move(source_degrees), std::move(e));
}

bool GradedFreeMap::is_zero() const noexcept {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> GradedFreeMap::find_unit_entry() const {
    for (std::size_t j = 0; j < cols(); ++j)
        for (std::size_t i = 0; i < rows(); ++i) {
            const auto& e = entry(i, j);
            if (!e.is_zero() && e.is_constant()) return std::pair{i, j};
        }
    return std::nullopt;
}

GradedFreeMap GradedFreeMap::compose(const GradedFreeMap& rhs) const {
    if (rhs.target_ != source_) throw std::invalid_argument("cannot compose: degree vectors do not match");
    const auto& P = ring_->polys();
    std::vector<Polynomial> e;
    e.reserve(rows() * rhs.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            Polynomial acc = P.zero();
            for (std::size_t k = 0; k < cols(); ++k) {
                const auto& a = entry(i, k);
                const auto& b = rhs.entry(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc = P.add(acc, P.mul(a, b));
            }
            e.push_back(std::move(acc));
        }
    return GradedFreeMap(ring_, target_, rhs.source_, std::move(e));
}

GradedFreeMap GradedFreeMap::add(const GradedFreeMap& rhs) const {
    if (rhs.target_ != target_ || rhs.source_ != source_) throw std::invalid_argument("cannot add: shapes differ");
    std::vector<Polynomial> e;
    e.reserve(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) e.push_back(ring_->polys().add(entries_[k], rhs.entries_[k]));
    return GradedFreeMap(ring_, target_, source_, std::move(e));
}

ModuleElement GradedFreeMap::column(std::size_t j, const ModuleOrder& order) const {
    std::vector<ModuleTerm> terms;
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& t : entry(i, j).terms())
            terms.push_back(ModuleTerm{t.monomial, static_cast<std::uint32_t>(i), t.coeff});
    return ModuleElement::from_terms(std::move(terms), order, ring_->field());
}

std::vector<ModuleElement> GradedFreeMap::columns(const ModuleOrder& order) const {
    std::vector<ModuleElement> out;
    out.reserve(cols());
    for (std::size_t j = 0; j < cols(); ++j) out.push_back(column(j, order));
    return out;
}

GradedFreeMap GradedFreeMap::over(RingPtr ring) const {
    if (ring->num_variables() != ring_->num_variables() || !(ring->field() == ring_->field()))
        throw std::invalid_argument("cannot move a matrix between unrelated rings");
    return GradedFreeMap(std::move(ring), target_, source_, entries_);
}

GradedFreeMap GradedFreeMap::select_columns(std::span<const std::size_t> keep) const {
    std::vector<int> src;
    std::vector<Polynomial> e;
    for (std::size_t j : keep) src.push_back(source_.at(j));
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j : keep) e.push_back(entry(i, j));
    return GradedFreeMap(ring_, target_, std::move(src), std::move(e));
}

GradedFreeMap dual_map(const GradedFreeMap& m) {
    std::vector<int> tgt, src;
    for (int d : m.source_degrees()) tgt.push_back(-d);
    for (int d : m.target_degrees()) src.push_back(-d);
    std::vector<Polynomial> e;
    e.reserve(m.entries().size());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) e.push_back(m.entry(i, j));
    return GradedFreeMap(m.ring(), std::move(tgt), std::move(src), std::move(e));
}

GradedFreeMap kronecker_identity(const GradedFreeMap& m, const std::vector<int>& inner) {
    std::size_t k = inner.size();
    std::vector<int> tgt, src;
    for (int d : m.target_degrees())
        for (int b : inner) tgt.push_back(d + b);
    for (int d : m.source_degrees())
        for (int b : inner) src.push_back(d + b);
    const auto& P = m.ring()->polys();
    std::vector<Polynomial> e(tgt.size() * src.size(), P.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& v = m.entry(i, j);
            if (v.is_zero()) continue;
            for (std::size_t b = 0; b < k; ++b) e[(i * k + b) * src.size() + (j * k + b)] = v;
        }
    return GradedFreeMap(m.ring(), std::move(tgt), std::move(src), std::move(e));
}

ModuleOrder graded_order(const RingContext& ring, std::vector<int> shifts) {
    return ModuleOrder(ring.polys().order(), ModuleOrderKind::TermOverPosition, std::move(shifts));
}

GradedFreeMap matrix_with_inferred_sources(RingPtr ring, std::vector<int> target_degrees,
                                           const std::vector<std::vector<Polynomial>>& rows) {
    if (rows.size() != target_degrees.size())
        throw std::invalid_argument(std::to_string(rows.size()) + " rows but " + std::to_string(target_degrees.size()) +
                                    " generator degrees");
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("matrix rows have different lengths");
    std::vector<int> source(ncols, target_degrees.empty() ? 0 : target_degrees.front());
    std::vector<Polynomial> entries;
    entries.reserve(rows.size() * ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Polynomial e = ring->reduce(rows[i][j]);
            if (e.is_zero()) continue;
            auto d = e.homogeneous_degree();
            if (!d) throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not homogeneous");
            source[j] = target_degrees[i] + *d;
            break;
        }
    }
    for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
    return GradedFreeMap(std::move(ring), std::move(target_degrees), std::move(source), std::move(entries));
}

}  // namespace hyperext

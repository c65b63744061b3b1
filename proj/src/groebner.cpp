#include "hyperext/groebner.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "hyperext/errors.hpp"

namespace hyperext {

namespace {

/// Homogeneous Buchberger, one degree at a time (normal selection strategy).
/// Inputs of degree d are reduced after all S-pairs of degree d, so an input
/// that survives reduction is a minimal generator modulo everything of lower
/// degree and the background inputs.
class Engine {
public:
    Engine(const PrimeField& field, const ModuleOrder& order, const GroebnerOptions& options)
        : field_(field), order_(order), arith_(field_, order_), options_(options), by_comp_(order.rank()) {}

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    void add_input(const ModuleElement& e, bool counted, std::size_t index) {
        if (e.is_zero()) return;
        inputs_.push_back(Input{e, e.degree(order_), counted, index});
    }

    void run() {
        std::stable_sort(inputs_.begin(), inputs_.end(), [](const Input& a, const Input& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            return !a.counted && b.counted;
        });
        std::size_t next = 0;
        constexpr int kNone = std::numeric_limits<int>::max();
        while (true) {
            int d_pairs = kNone;
            for (const auto& p : pairs_) d_pairs = std::min(d_pairs, p.degree);
            int d_in = next < inputs_.size() ? inputs_[next].degree : kNone;
            int d = std::min(d_pairs, d_in);
            if (d == kNone) break;
            if (options_.truncate_degree && d > *options_.truncate_degree) {
                complete_through_ = *options_.truncate_degree;
                break;
            }
            if (d_pairs == d) process_pairs(d);
            while (next < inputs_.size() && inputs_[next].degree == d) {
                Input& in = inputs_[next++];
                ModuleElement r = reduce(in.element);
                if (r.is_zero()) continue;
                if (options_.trace)
                    *options_.trace << "deg " << d << ": input " << in.index << (in.counted ? "" : " (background)")
                                    << " -> basis element " << basis_.size() << "\n";
                insert(arith_.make_monic(r));
                if (in.counted) minimal_.push_back(in.index);
            }
        }
    }

    const std::vector<std::size_t>& minimal() const noexcept { return minimal_; }
    std::vector<ModuleElement>& basis() noexcept { return basis_; }
    std::optional<int> complete_through() const noexcept { return complete_through_; }

    ModuleElement reduce(const ModuleElement& input) const {
        std::vector<ModuleTerm> rem;
        ModuleElement v = input;
        while (!v.is_zero()) {
            auto ts = v.terms();
            std::size_t pos = 0;
            std::optional<std::size_t> div;
            for (; pos < ts.size(); ++pos)
                if ((div = find_divisor(ts[pos]))) break;
            if (!div) {
                rem.insert(rem.end(), ts.begin(), ts.end());
                break;
            }
            rem.insert(rem.end(), ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(pos));
            const ModuleElement& g = basis_[*div];
            const ModuleTerm& t = ts[pos];
            Coeff c = field_.div(t.coeff, g.lead().coeff);
            Monomial q = t.monomial.quotient(g.lead().monomial);
            ModuleElement tail(std::vector<ModuleTerm>(ts.begin() + static_cast<std::ptrdiff_t>(pos), ts.end()));
            v = arith_.sub_multiple(tail, c, q, g);
        }
        return ModuleElement(std::move(rem));
    }

    /// Tail-reduces every element against the others.
    void interreduce() {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const ModuleElement& g = basis_[k];
            if (g.size() <= 1) continue;
            ModuleElement tail(std::vector<ModuleTerm>(g.terms().begin() + 1, g.terms().end()));
            ModuleElement r = reduce(tail);
            std::vector<ModuleTerm> t;
            t.reserve(r.size() + 1);
            t.push_back(g.lead());
            t.insert(t.end(), r.terms().begin(), r.terms().end());
            basis_[k] = ModuleElement(std::move(t));
        }
    }

private:
    struct Input {
        ModuleElement element;
        int degree;
        bool counted;
        std::size_t index;
    };
    struct Pair {
        int degree;
        std::uint32_t i, j;
        Monomial lcm;
        std::uint32_t comp;
    };

    std::optional<std::size_t> find_divisor(const ModuleTerm& t) const {
        for (std::uint32_t k : by_comp_[t.component])
            if (basis_[k].lead().monomial.divides(t.monomial)) return k;
        return std::nullopt;
    }

    void process_pairs(int d) {
        std::vector<Pair> now;
        std::vector<Pair> later;
        for (auto& p : pairs_) (p.degree == d ? now : later).push_back(p);
        pairs_ = std::move(later);
        std::sort(now.begin(), now.end(), [](const Pair& a, const Pair& b) {
            return a.i != b.i ? a.i < b.i : a.j < b.j;
        });
        for (const auto& p : now) {
            if (p.lcm.degree() > options_.degree_cap) throw DegreeCapExceeded(p.lcm.degree(), options_.degree_cap);
            const ModuleElement& gi = basis_[p.i];
            const ModuleElement& gj = basis_[p.j];
            Monomial qi = p.lcm.quotient(gi.lead().monomial);
            Monomial qj = p.lcm.quotient(gj.lead().monomial);
            ModuleElement s = arith_.sub_multiple(ModuleElement{}, field_.neg(1), qi, gi);
            s = arith_.sub_multiple(s, 1, qj, gj);
            ModuleElement r = reduce(s);
            if (options_.trace)
                *options_.trace << "deg " << d << ": spair(" << p.i << "," << p.j << ")"
                                << (r.is_zero() ? " -> 0" : " -> basis element " + std::to_string(basis_.size()))
                                << "\n";
            if (!r.is_zero()) insert(arith_.make_monic(r));
        }
    }

    void insert(ModuleElement h) {
        const auto k = static_cast<std::uint32_t>(basis_.size());
        const Monomial lead = h.lead().monomial;
        const std::uint32_t c = h.lead().component;
        const bool single = h.single_component();

        // Gebauer-Moeller criterion B on the existing queue.
        std::erase_if(pairs_, [&](const Pair& p) {
            if (p.comp != c || !lead.divides(p.lcm)) return false;
            Monomial li = basis_[p.i].lead().monomial.lcm(lead);
            Monomial lj = basis_[p.j].lead().monomial.lcm(lead);
            return !(li == p.lcm) && !(lj == p.lcm);
        });

        struct Cand {
            std::uint32_t i;
            Monomial lcm;
            bool product;
            bool alive = true;
        };
        std::vector<Cand> cands;
        for (std::uint32_t i : by_comp_[c]) {
            const Monomial& li = basis_[i].lead().monomial;
            bool product = single && single_[i] && li.coprime(lead);
            cands.push_back(Cand{i, li.lcm(lead), product});
        }
        // Criterion M: a strictly smaller lcm dividing ours makes the pair redundant.
        for (auto& a : cands)
            for (const auto& b : cands)
                if (&a != &b && b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
                    a.alive = false;
                    break;
                }
        // Criterion F plus the product criterion (valid only when both elements
        // live in a single component, i.e. behave like ideal elements).
        for (std::size_t x = 0; x < cands.size(); ++x) {
            if (!cands[x].alive) continue;
            bool any_product = cands[x].product;
            for (std::size_t y = x + 1; y < cands.size(); ++y)
                if (cands[y].alive && cands[y].lcm == cands[x].lcm) {
                    any_product = any_product || cands[y].product;
                    cands[y].alive = false;
                }
            if (any_product) cands[x].alive = false;
        }
        for (const auto& cd : cands)
            if (cd.alive) pairs_.push_back(Pair{order_.weighted_degree(cd.lcm, c), cd.i, k, cd.lcm, c});

        basis_.push_back(std::move(h));
        single_.push_back(single);
        by_comp_[c].push_back(k);
    }

    const PrimeField field_;
    const ModuleOrder order_;
    ModuleArithmetic arith_;
    GroebnerOptions options_;
    std::vector<ModuleElement> basis_;
    std::vector<bool> single_;
    std::vector<std::vector<std::uint32_t>> by_comp_;
    std::vector<Pair> pairs_;
    std::vector<Input> inputs_;
    std::vector<std::size_t> minimal_;
    std::optional<int> complete_through_;
};

void add_relation_multiples(Engine& engine, const RingContext& ring, const ModuleOrder& order,
                            std::size_t first, std::size_t last) {
    if (!ring.is_hypersurface()) return;
    const Polynomial& f = *ring.hypersurface();
    for (std::size_t comp = first; comp < last; ++comp) {
        std::vector<ModuleTerm> terms;
        for (const auto& t : f.terms())
            terms.push_back(ModuleTerm{t.monomial, static_cast<std::uint32_t>(comp), t.coeff});
        engine.add_input(ModuleElement::from_terms(std::move(terms), order, ring.field()), false, 0);
    }
}

}  // namespace

GroebnerBasis::GroebnerBasis(PrimeField field, ModuleOrder order, bool over_quotient,
                             std::vector<ModuleElement> generators, std::optional<int> complete_through)
    : field_(field), order_(std::move(order)), over_quotient_(over_quotient), gens_(std::move(generators)),
      complete_through_(complete_through), by_component_(order_.rank()) {
    for (std::size_t k = 0; k < gens_.size(); ++k) by_component_.at(gens_[k].lead().component).push_back(k);
}

std::optional<std::size_t> GroebnerBasis::find_divisor(const ModuleTerm& t) const {
    for (std::size_t k : by_component_[t.component])
        if (gens_[k].lead().monomial.divides(t.monomial)) return k;
    return std::nullopt;
}

ModuleElement GroebnerBasis::normal_form(const ModuleElement& input) const {
    ModuleArithmetic arith(field_, order_);
    std::vector<ModuleTerm> rem;
    ModuleElement v = input.resorted(order_);
    while (!v.is_zero()) {
        auto ts = v.terms();
        std::size_t pos = 0;
        std::optional<std::size_t> div;
        for (; pos < ts.size(); ++pos)
            if ((div = find_divisor(ts[pos]))) break;
        if (!div) {
            rem.insert(rem.end(), ts.begin(), ts.end());
            break;
        }
        rem.insert(rem.end(), ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(pos));
        const ModuleElement& g = gens_[*div];
        Coeff c = field_.div(ts[pos].coeff, g.lead().coeff);
        Monomial q = ts[pos].monomial.quotient(g.lead().monomial);
        ModuleElement tail(std::vector<ModuleTerm>(ts.begin() + static_cast<std::ptrdiff_t>(pos), ts.end()));
        v = arith.sub_multiple(tail, c, q, g);
    }
    return ModuleElement(std::move(rem));
}

std::vector<Monomial> GroebnerBasis::leading_monomials(std::uint32_t component) const {
    std::vector<Monomial> out;
    if (component >= by_component_.size()) return out;
    for (std::size_t k : by_component_[component]) out.push_back(gens_[k].lead().monomial);
    return out;
}

GroebnerBasis buchberger(const RingContext& ring, const ModuleOrder& order, std::span<const ModuleElement> gens,
                         const GroebnerOptions& options) {
    Engine engine(ring.field(), order, options);
    add_relation_multiples(engine, ring, order, 0, order.rank());
    for (std::size_t k = 0; k < gens.size(); ++k) engine.add_input(gens[k].resorted(order), true, k);
    engine.run();
    engine.interreduce();
    std::sort(engine.basis().begin(), engine.basis().end(), [&](const ModuleElement& a, const ModuleElement& b) {
        return order.compare(a.lead(), b.lead()) == std::strong_ordering::greater;
    });
    return GroebnerBasis(ring.field(), order, ring.is_hypersurface(), std::move(engine.basis()),
                         engine.complete_through());
}

GroebnerBasis buchberger(const RingContext& ring, const ModuleOrder& order, std::span<const ModuleElement> gens) {
    return buchberger(ring, order, gens, GroebnerOptions::for_ring(ring));
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb) { return gb.normal_form(v); }

std::vector<std::size_t> select_minimal_generators(const RingContext& ring, const ModuleOrder& order,
                                                   std::span<const ModuleElement> gens,
                                                   std::span<const ModuleElement> background) {
    GroebnerOptions options = GroebnerOptions::for_ring(ring);
    int top = std::numeric_limits<int>::min();
    for (const auto& g : gens)
        if (!g.is_zero()) top = std::max(top, g.resorted(order).degree(order));
    if (top == std::numeric_limits<int>::min()) return {};
    options.truncate_degree = top;
    Engine engine(ring.field(), order, options);
    add_relation_multiples(engine, ring, order, 0, order.rank());
    for (const auto& b : background) engine.add_input(b.resorted(order), false, 0);
    for (std::size_t k = 0; k < gens.size(); ++k) engine.add_input(gens[k].resorted(order), true, k);
    engine.run();
    return engine.minimal();
}

std::vector<ModuleElement> kernel_elements(const GradedFreeMap& m, const GradedFreeMap* relations) {
    const RingContext& ring = *m.ring();
    const std::size_t rt = m.rows();
    if (relations && relations->target_degrees() != m.target_degrees())
        throw std::invalid_argument("relations must map into the target of the map");
    std::vector<int> shifts = m.target_degrees();
    shifts.insert(shifts.end(), m.source_degrees().begin(), m.source_degrees().end());
    ModuleOrder elim(ring.polys().order(), ModuleOrderKind::PositionOverTerm, shifts);

    Engine engine(ring.field(), elim, GroebnerOptions::for_ring(ring));
    add_relation_multiples(engine, ring, elim, 0, rt);
    if (relations)
        for (std::size_t j = 0; j < relations->cols(); ++j) engine.add_input(relations->column(j, elim), false, 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        ModuleElement col = m.column(j, elim);
        std::vector<ModuleTerm> terms(col.terms().begin(), col.terms().end());
        terms.push_back(ModuleTerm{Monomial{}, static_cast<std::uint32_t>(rt + j), 1});
        engine.add_input(ModuleElement::from_terms(std::move(terms), elim, ring.field()), false, j);
    }
    engine.run();

    ModuleOrder src_order = graded_order(ring, m.source_degrees());
    std::vector<ModuleElement> out;
    for (const auto& g : engine.basis()) {
        if (g.lead().component < rt) continue;
        std::vector<ModuleTerm> terms;
        terms.reserve(g.size());
        for (const auto& t : g.terms())
            terms.push_back(ModuleTerm{t.monomial, static_cast<std::uint32_t>(t.component - rt), t.coeff});
        out.push_back(ModuleElement::from_terms(std::move(terms), src_order, ring.field()));
    }
    return out;
}

GradedFreeMap syzygies(const GradedFreeMap& m) {
    const RingContext& ring = *m.ring();
    ModuleOrder src_order = graded_order(ring, m.source_degrees());
    std::vector<ModuleElement> ker = kernel_elements(m);
    std::vector<std::size_t> keep = select_minimal_generators(ring, src_order, ker, {});
    std::vector<ModuleElement> cols;
    std::vector<int> degrees;
    for (std::size_t k : keep) {
        cols.push_back(ker[k]);
        degrees.push_back(ker[k].degree(src_order));
    }
    return GradedFreeMap::from_columns(m.ring(), m.source_degrees(), std::move(degrees), cols);
}

GradedFreeMap minimal_image_generators(const GradedFreeMap& m) {
    ModuleOrder order = graded_order(*m.ring(), m.target_degrees());
    std::vector<ModuleElement> cols = m.columns(order);
    std::vector<std::size_t> keep = select_minimal_generators(*m.ring(), order, cols, {});
    return m.select_columns(keep);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    ModuleArithmetic arith(gb.field(), gb.order());
    const auto& g = gb.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (g[i].lead().component != g[j].lead().component) continue;
            Monomial l = g[i].lead().monomial.lcm(g[j].lead().monomial);
            Coeff ci = gb.field().inv(g[i].lead().coeff);
            Coeff cj = gb.field().inv(g[j].lead().coeff);
            ModuleElement s = arith.sub_multiple(ModuleElement{}, gb.field().neg(ci),
                                                 l.quotient(g[i].lead().monomial), g[i]);
            s = arith.sub_multiple(s, cj, l.quotient(g[j].lead().monomial), g[j]);
            if (!gb.normal_form(s).is_zero()) return false;
        }
    return true;
}

}  // namespace hyperext

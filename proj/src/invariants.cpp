#include "hyperext/invariants.hpp"

#include <stdexcept>

#include "hyperext/errors.hpp"

namespace hyperext {

std::string to_string(HomologyKind k) { return k == HomologyKind::Ext ? "ext" : "tor"; }

std::vector<Length> ExtTorTable::lengths() const {
    std::vector<Length> out;
    for (const auto& e : entries) out.push_back(e.length);
    return out;
}

int ExtTorTable::finite_length_prefix() const {
    int last = -1;
    for (const auto& e : entries) {
        if (!e.length.is_finite()) break;
        last = e.index;
    }
    return last;
}

namespace {

void require_same_ring(const FreeResolution& res, const PresentedModule& N) {
    if (!res.ring()->same_ring(*N.ring())) throw std::invalid_argument("modules live over different rings");
}

void require_window(const FreeResolution& res, int top) {
    if (!res.terminated() && res.length() < top)
        throw std::invalid_argument("resolution too short: need " + std::to_string(top) + " differentials, have " +
                                    std::to_string(res.length()));
}

bool has_module(const FreeResolution& res, int i) { return !res.module_degrees(i).empty(); }

HomologyEntry finish(int i, ModuleMap incoming, ModuleMap outgoing) {
    PresentedModule H = homology_at(incoming, outgoing);
    Length len = H.length();
    bool zero = H.is_zero();
    return HomologyEntry{i, std::move(H), len, zero, std::move(incoming), std::move(outgoing)};
}

HomologyEntry zero_entry(const RingPtr& ring, int i) {
    PresentedModule Z = PresentedModule::zero(ring);
    return HomologyEntry{i, Z, Length::finite(0), true, zero_map_into(Z), zero_map_from(Z)};
}

std::vector<int> negated(std::vector<int> v) {
    for (int& d : v) d = -d;
    return v;
}

HomologyEntry ext_entry(const FreeResolution& res, const PresentedModule& N, int i) {
    if (!has_module(res, i)) return zero_entry(N.ring(), i);
    PresentedModule Ci = direct_sum_shifted(N, negated(res.module_degrees(i)));
    ModuleMap incoming = i == 0 ? zero_map_into(Ci) : hom_into(res.differential(i), N);
    ModuleMap outgoing = i + 1 <= res.length() ? hom_into(res.differential(i + 1), N) : zero_map_from(Ci);
    return finish(i, std::move(incoming), std::move(outgoing));
}

HomologyEntry tor_entry(const FreeResolution& res, const PresentedModule& N, int i) {
    if (!has_module(res, i)) return zero_entry(N.ring(), i);
    PresentedModule Ci = direct_sum_shifted(N, res.module_degrees(i));
    ModuleMap incoming = i + 1 <= res.length() ? tensor_with(res.differential(i + 1), N) : zero_map_into(Ci);
    ModuleMap outgoing = i == 0 ? zero_map_from(Ci) : tensor_with(res.differential(i), N);
    return finish(i, std::move(incoming), std::move(outgoing));
}

bool ext_vanishes(const FreeResolution& res, const PresentedModule& N, int i) {
    if (!has_module(res, i)) return true;
    PresentedModule Ci = direct_sum_shifted(N, negated(res.module_degrees(i)));
    ModuleMap incoming = i == 0 ? zero_map_into(Ci) : hom_into(res.differential(i), N);
    ModuleMap outgoing = i + 1 <= res.length() ? hom_into(res.differential(i + 1), N) : zero_map_from(Ci);
    return homology_vanishes(incoming, outgoing);
}

std::int64_t require_finite(const ExtTorTable& t, int i) {
    const Length& l = t.at(i).length;
    if (!l.is_finite())
        throw HypothesisViolation(to_string(t.kind) + " index " + std::to_string(i) + " has infinite length");
    return l.value();
}

}  // namespace

ExtTorTable ext(const FreeResolution& res, const PresentedModule& N, int i_max) {
    require_same_ring(res, N);
    require_window(res, i_max + 1);
    ExtTorTable t{HomologyKind::Ext, N.ring(), {}};
    for (int i = 0; i <= i_max; ++i) t.entries.push_back(ext_entry(res, N, i));
    return t;
}

ExtTorTable tor(const FreeResolution& res, const PresentedModule& N, int i_max) {
    require_same_ring(res, N);
    require_window(res, i_max + 1);
    ExtTorTable t{HomologyKind::Tor, N.ring(), {}};
    for (int i = 0; i <= i_max; ++i) t.entries.push_back(tor_entry(res, N, i));
    return t;
}

ExtTorTable ext(const PresentedModule& M, const PresentedModule& N, int i_max) {
    if (i_max < 0) throw std::invalid_argument("max index must be non-negative");
    return ext(minimal_resolution(M, i_max + 1), N, i_max);
}

ExtTorTable tor(const PresentedModule& M, const PresentedModule& N, int i_max) {
    if (i_max < 0) throw std::invalid_argument("max index must be non-negative");
    return tor(minimal_resolution(M, i_max + 1), N, i_max);
}

int grade(const PresentedModule& M) {
    if (M.is_zero()) throw std::invalid_argument("grade of the zero module is undefined");
    const RingPtr& ring = M.ring();
    int d = ring->dimension();
    FreeResolution res = minimal_resolution(M, d + 1);
    PresentedModule R = PresentedModule::free(ring, {0});
    for (int i = 0; i <= d; ++i)
        if (!ext_vanishes(res, R, i)) return i;
    throw EngineBug("Ext^i(M, R) vanishes for all i <= dim R on a nonzero module");
}

PresentedModule e_module(const PresentedModule& M, std::optional<int> known_grade) {
    int g = known_grade ? *known_grade : grade(M);
    FreeResolution res = minimal_resolution(M, std::max(g, 1));
    if (g == 0) return PresentedModule::free(M.ring(), negated(res.module_degrees(0)));
    if (g > res.length()) throw EngineBug("grade exceeds the length of the resolution");
    return PresentedModule(dual_map(res.differential(g)));
}

ThetaValue theta(const PresentedModule& M, const PresentedModule& N) {
    const RingPtr& ring = M.ring();
    if (!ring->is_hypersurface()) throw HypothesisViolation("theta is defined over a hypersurface");
    if (!ring->same_ring(*N.ring())) throw std::invalid_argument("modules live over different rings");
    FreeResolution res = minimal_resolution(M);
    if (res.terminated()) {
        int pd = *res.projective_dimension();
        return ThetaValue{0, 2 * ((pd + 2) / 2), std::nullopt, true};
    }
    if (!res.periodic_from())
        throw Inconclusive("periodicity not certified within " + std::to_string(res.length()) + " steps");
    int s = *res.periodic_from();
    int j0 = (s + 1) / 2;
    int top = 2 * j0 + 3;
    if (res.length() < top + 1) res = minimal_resolution(M, top + 1);
    std::int64_t len[4];
    for (int k = 0; k < 4; ++k) {
        HomologyEntry e = tor_entry(res, N, 2 * j0 + k);
        if (!e.length.is_finite())
            throw HypothesisViolation("Tor_" + std::to_string(2 * j0 + k) + " has infinite length past periodicity");
        len[k] = e.length.value();
    }
    std::int64_t a = len[0] - len[1], b = len[2] - len[3];
    if (a != b) throw EngineBug("theta differs at indices " + std::to_string(2 * j0) + " and " + std::to_string(2 * j0 + 2));
    return ThetaValue{static_cast<int>(a), 2 * j0, s, false};
}

std::int64_t chi(const ExtTorTable& t, int j) {
    if (t.kind != HomologyKind::Tor) throw std::invalid_argument("chi needs a Tor table");
    if (j < 0) throw std::invalid_argument("chi index must be non-negative");
    std::int64_t sum = 0;
    for (int i = j; i <= t.max_index(); ++i) sum += ((i - j) % 2 == 0 ? 1 : -1) * require_finite(t, i);
    return sum;
}

std::int64_t chi(const PresentedModule& M, const PresentedModule& N, int j) {
    if (M.ring()->is_hypersurface()) throw HypothesisViolation("chi is defined over a regular ring");
    FreeResolution res = minimal_resolution(M);
    int pd = res.projective_dimension().value_or(res.length());
    return chi(tor(res, N, std::max(pd, j)), j);
}

std::int64_t xi_bar(const ExtTorTable& t, int j) {
    if (t.kind != HomologyKind::Ext) throw std::invalid_argument("xi_bar needs an Ext table");
    if (j < 0 || j > t.max_index()) throw std::invalid_argument("xi_bar index outside the table");
    std::int64_t sum = 0;
    for (int i = 0; i <= j; ++i) sum += (i % 2 == 0 ? 1 : -1) * require_finite(t, j - i);
    return sum;
}

std::int64_t xi_bar(const PresentedModule& M, const PresentedModule& N, int j) { return xi_bar(ext(M, N, j), j); }

std::string ProjectiveDimension::to_string() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::Infinite: return "inf";
        case Kind::Inconclusive: return "inconclusive";
    }
    return "";
}

ProjectiveDimension pdim(const FreeResolution& res) {
    if (res.terminated()) return {ProjectiveDimension::Kind::Finite, *res.projective_dimension()};
    if (res.periodic_from()) return {ProjectiveDimension::Kind::Infinite, res.length()};
    return {ProjectiveDimension::Kind::Inconclusive, res.length()};
}

ProjectiveDimension pdim(const PresentedModule& M) { return pdim(minimal_resolution(M)); }

DepthDim depth_and_dim(const PresentedModule& M) {
    if (M.is_zero()) throw std::invalid_argument("depth of the zero module is undefined");
    int dim = M.krull_dimension();
    FreeResolution res = minimal_resolution(residue_field(M.ring()), dim + 1);
    for (int i = 0; i <= dim; ++i)
        if (!ext_vanishes(res, M, i)) return DepthDim{i, dim};
    throw EngineBug("Ext^i(k, M) vanishes for all i <= dim M on a nonzero module");
}

InvariantReport invariant_report(const PresentedModule& M, const PresentedModule& N) {
    InvariantReport r{grade(M), pdim(M), std::nullopt, {}, {}, {}};
    const RingPtr& ring = M.ring();
    if (ring->is_hypersurface()) {
        try {
            r.theta = theta(M, N).value;
        } catch (const Inconclusive& e) {
            r.notes.push_back(std::string("theta: inconclusive: ") + e.what());
        } catch (const HypothesisViolation& e) {
            r.notes.push_back(std::string("theta: hypothesis unmet: ") + e.what());
        }
    } else if (r.pdim.kind == ProjectiveDimension::Kind::Finite) {
        ExtTorTable t = tor(M, N, std::max(r.pdim.value, 0));
        for (int j = 0; j <= r.pdim.value; ++j) {
            try {
                r.chi[j] = chi(t, j);
            } catch (const HypothesisViolation&) {
                r.notes.push_back("chi_" + std::to_string(j) + ": infinite Tor length");
            }
        }
    }
    ExtTorTable e = ext(M, N, r.grade);
    for (int j = 0; j <= e.finite_length_prefix(); ++j) r.xi_bar[j] = xi_bar(e, j);
    if (e.finite_length_prefix() < r.grade)
        r.notes.push_back("xi_bar: Ext^" + std::to_string(e.finite_length_prefix() + 1) + " has infinite length");
    return r;
}

}  // namespace hyperext

#include "hyperext/rigidity.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "hyperext/errors.hpp"
#include "hyperext/script_writer.hpp"

namespace hyperext {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Fail: return "fail";
        case VerdictStatus::Inapplicable: return "inapplicable";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "";
}

std::string to_string(ModuleTarget t) {
    switch (t) {
        case ModuleTarget::Generic: return "generic";
        case ModuleTarget::FiniteLength: return "finite-length";
        case ModuleTarget::PositiveGrade: return "positive-grade";
        case ModuleTarget::CohenMacaulay: return "cohen-macaulay";
        case ModuleTarget::Syzygy: return "syzygy";
    }
    return "";
}

namespace {

std::string lengths_string(const ExtTorTable& t) {
    std::string out;
    for (const auto& e : t.entries) out += (out.empty() ? "" : ",") + e.length.to_string();
    return out;
}

class Check {
public:
    Check(std::string name, const RingContext& ring, const CheckOptions& opts,
          std::vector<std::pair<std::string, PresentedModule>> modules, std::string command)
        : opts_(opts) {
        v_.check_name = std::move(name);
        v_.status = VerdictStatus::Inapplicable;
        v_.provenance = Provenance{opts.seed, ring.description(), ring.degree_cap(), ring.default_length_cap()};
        if (auto cap = ring.limits().length_cap) v_.provenance.length_cap = *cap;
        v_.witness.script = replay_script(ring, modules, command);
    }

    template <class Body>
    CheckVerdict run(Body body) {
        try {
            body(*this);
        } catch (const HypothesisViolation& e) {
            set(VerdictStatus::Inapplicable, std::string("hypothesis unmet: ") + e.what());
        } catch (const Inconclusive& e) {
            set(VerdictStatus::Inconclusive, e.what());
        }
        return std::move(v_);
    }

    void fact(std::string key, std::string value) { v_.witness.facts.emplace_back(std::move(key), std::move(value)); }
    void fact(std::string key, std::int64_t value) { fact(std::move(key), std::to_string(value)); }
    void set(VerdictStatus s, std::string reason) {
        v_.status = s;
        v_.reason = std::move(reason);
    }
    void genuine() { v_.genuine = true; }
    void negative_control() { v_.negative_control = true; }
    ExtTorTable observe(ExtTorTable t) {
        if (opts_.observer) opts_.observer(t);
        return t;
    }
    const CheckOptions& opts() const { return opts_; }

private:
    CheckVerdict v_;
    const CheckOptions& opts_;
};

int window_low(const PresentedModule& a, const PresentedModule& b) {
    int lo = 0;
    bool any = false;
    for (const auto* m : {&a, &b}) {
        if (m->num_generators() == 0) continue;
        lo = any ? std::min(lo, m->min_generator_degree()) : m->min_generator_degree();
        any = true;
    }
    return lo;
}

std::string window_string(const std::vector<std::int64_t>& w) {
    std::string out;
    for (auto x : w) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

}  // namespace

CheckVerdict check_ext_rigidity(const PresentedModule& M, const PresentedModule& N, const CheckOptions& opts) {
    Check c("ext_rigidity", *M.ring(), opts, {{"M", M}, {"N", N}}, "check ext_rigidity M N;");
    return c.run([&](Check& c) {
        if (M.is_zero()) return c.set(VerdictStatus::Inapplicable, "M is zero");
        int g = grade(M);
        const ExtTorTable& t = c.observe(ext(M, N, g));
        c.fact("grade", g);
        c.fact("ext_lengths", lengths_string(t));
        bool any = false;
        for (int n = 0; n <= g; ++n) {
            if (!t.at(n).zero) continue;
            any = true;
            for (int i = 0; i < n; ++i) {
                if (!t.at(i).zero) {
                    c.fact("vanishing_index", n);
                    c.fact("nonvanishing_index", i);
                    return c.set(VerdictStatus::Fail, "Ext^" + std::to_string(n) + " = 0 but Ext^" + std::to_string(i) +
                                                          " != 0 with n <= grade");
                }
            }
            if (n >= 1) c.genuine();
        }
        // Ext^0 = 0 carries no content once grade >= 1; it only counts for grade 0.
        if (g >= 1) {
            any = false;
            for (int n = 1; n <= g; ++n) any = any || t.at(n).zero;
        }
        if (!any) return c.set(VerdictStatus::Inapplicable, "no Ext^n(M, N) vanishes for n <= grade M");
        c.set(VerdictStatus::Pass, "every vanishing Ext^n with n <= grade has all lower Ext vanishing");
    });
}

CheckVerdict check_self_ext_nonvanishing(const PresentedModule& M, const CheckOptions& opts) {
    Check c("self_ext", *M.ring(), opts, {{"M", M}}, "check self_ext M;");
    return c.run([&](Check& c) {
        if (!M.ring()->is_hypersurface()) return c.set(VerdictStatus::Inapplicable, "ring is not a hypersurface");
        if (M.is_zero()) return c.set(VerdictStatus::Inapplicable, "M is zero");
        int g = grade(M);
        const ExtTorTable& t = c.observe(ext(M, M, g));
        c.fact("grade", g);
        c.fact("ext_lengths", lengths_string(t));
        for (int i = 0; i <= g; ++i) {
            if (t.at(i).zero) {
                c.fact("vanishing_index", i);
                return c.set(VerdictStatus::Fail, "Ext^" + std::to_string(i) + "(M, M) = 0 with i <= grade");
            }
        }
        if (g >= 1) c.genuine();
        c.set(VerdictStatus::Pass, "Ext^i(M, M) != 0 for 0 <= i <= grade");
    });
}

CheckVerdict check_tor_rigidity_theta(const PresentedModule& M, const PresentedModule& N, const CheckOptions& opts) {
    Check c("tor_rigidity", *M.ring(), opts, {{"M", M}, {"N", N}}, "check tor_rigidity M N;");
    return c.run([&](Check& c) {
        if (!M.ring()->is_hypersurface()) return c.set(VerdictStatus::Inapplicable, "ring is not a hypersurface");
        ThetaValue th = theta(M, N);
        const ExtTorTable& t = c.observe(tor(M, N, c.opts().tor_max));
        c.fact("theta", th.value);
        c.fact("tor_lengths", lengths_string(t));
        if (th.periodic_from) c.fact("periodic_from", *th.periodic_from);
        std::optional<int> n;
        for (int i = 0; i <= t.max_index() && !n; ++i)
            if (t.at(i).zero) n = i;
        if (th.value != 0) {
            if (n) {
                for (int i = *n + 1; i <= t.max_index(); ++i)
                    if (!t.at(i).zero) {
                        c.negative_control();
                        c.fact("vanishing_index", *n);
                        c.fact("nonvanishing_index", i);
                        break;
                    }
            }
            return c.set(VerdictStatus::Inapplicable, "theta != 0");
        }
        if (!n) return c.set(VerdictStatus::Inapplicable, "no Tor_n(M, N) vanishes in the computed range");
        c.fact("vanishing_index", *n);
        for (int i = *n + 1; i <= t.max_index(); ++i)
            if (!t.at(i).zero) {
                c.fact("nonvanishing_index", i);
                return c.set(VerdictStatus::Fail, "theta = 0 but Tor vanishing is not rigid");
            }
        if (!th.finite_pdim) c.genuine();
        c.set(VerdictStatus::Pass, "theta = 0 and Tor vanishes from the first vanishing index on");
    });
}

CheckVerdict check_ext_tor_duality(const PresentedModule& M, const PresentedModule& N, const CheckOptions& opts) {
    Check c("ext_tor", *M.ring(), opts, {{"M", M}, {"N", N}}, "check ext_tor M N;");
    return c.run([&](Check& c) {
        if (M.is_zero()) return c.set(VerdictStatus::Inapplicable, "M is zero");
        int g = grade(M);
        c.fact("grade", g);
        if (g == 0) return c.set(VerdictStatus::Inapplicable, "grade 0: empty index range");
        PresentedModule E = e_module(M, g);
        const ExtTorTable& e = c.observe(ext(M, N, g - 1));
        const ExtTorTable& t = c.observe(tor(E, N, g));
        c.fact("ext_lengths", lengths_string(e));
        c.fact("tor_lengths_of_E", lengths_string(t));
        for (int i = 0; i <= g - 1; ++i) {
            const auto& a = e.at(i);
            const auto& b = t.at(g - i);
            int lo = window_low(a.module, b.module);
            int hi = std::max(lo, c.opts().prefix_top);
            auto wa = a.module.hilbert_window(lo, hi);
            auto wb = b.module.hilbert_window(lo, hi);
            if (wa != wb || a.zero != b.zero || (a.length.is_finite() && b.length.is_finite() && a.length != b.length)) {
                c.fact("index", i);
                c.fact("ext_window", window_string(wa));
                c.fact("tor_window", window_string(wb));
                c.fact("window_start", lo);
                return c.set(VerdictStatus::Fail, "Ext^" + std::to_string(i) + "(M, N) and Tor_" +
                                                      std::to_string(g - i) + "(E(M), N) differ");
            }
        }
        c.genuine();
        c.set(VerdictStatus::Pass, "Hilbert prefixes agree for 0 <= i <= grade - 1");
    });
}

CheckVerdict check_grade_drop(const PresentedModule& M, const CheckOptions& opts) {
    Check c("grade_drop", *M.ring(), opts, {{"M", M}}, "check grade_drop M;");
    return c.run([&](Check& c) {
        if (!M.ring()->is_hypersurface()) return c.set(VerdictStatus::Inapplicable, "ring is not a hypersurface");
        if (M.is_zero()) return c.set(VerdictStatus::Inapplicable, "M is zero");
        int gR = grade(M);
        int gQ = grade(restrict_to_ambient(M));
        c.fact("grade_R", gR);
        c.fact("grade_Q", gQ);
        if (gR != gQ - 1) return c.set(VerdictStatus::Fail, "grade over R is not grade over Q minus one");
        c.genuine();
        c.set(VerdictStatus::Pass, "grade_R M = grade_Q M - 1");
    });
}

CheckVerdict check_xi_chi_bridge(const PresentedModule& M, const PresentedModule& N, int i, const CheckOptions& opts) {
    Check c("xi_chi", *M.ring(), opts, {{"M", M}, {"N", N}}, "check xi_chi M N at " + std::to_string(i) + ";");
    return c.run([&](Check& c) {
        if (M.ring()->is_hypersurface()) return c.set(VerdictStatus::Inapplicable, "ring is not regular");
        if (M.is_zero()) return c.set(VerdictStatus::Inapplicable, "M is zero");
        int g = grade(M);
        c.fact("grade", g);
        c.fact("index", i);
        if (i < 1 || i > g - 1) return c.set(VerdictStatus::Inapplicable, "index outside 1 <= i <= grade - 1");
        const ExtTorTable& e = c.observe(ext(M, N, i));
        c.fact("ext_lengths", lengths_string(e));
        if (e.finite_length_prefix() < i) return c.set(VerdictStatus::Inapplicable, "Ext^j(M, N) has infinite length for some j <= i");
        std::int64_t xi = xi_bar(e, i);
        PresentedModule E = e_module(M, g);
        const ExtTorTable& t = c.observe(tor(E, N, g));
        c.fact("tor_lengths_of_E", lengths_string(t));
        std::int64_t ch = chi(t, g - i);
        c.fact("xi_bar", xi);
        c.fact("chi", ch);
        bool all_zero = true;
        for (int j = 0; j <= i; ++j) all_zero = all_zero && e.at(j).zero;
        if (xi != ch) return c.set(VerdictStatus::Fail, "xi_bar_i(M, N) != chi_{g-i}(E(M), N)");
        if (xi < 0) return c.set(VerdictStatus::Fail, "xi_bar_i(M, N) < 0");
        if ((xi == 0) != all_zero) return c.set(VerdictStatus::Fail, "xi_bar_i = 0 does not match vanishing of Ext^{<= i}");
        c.genuine();
        c.set(VerdictStatus::Pass, "xi_bar_i = chi_{g-i}(E(M), N) >= 0 with matching vanishing");
    });
}

CheckVerdict check_ext_tensor_identity(const PresentedModule& M, const PresentedModule& N, int n, const CheckOptions& opts) {
    Check c("ext_tensor", *M.ring(), opts, {{"M", M}, {"N", N}}, "check ext_tensor M N at " + std::to_string(n) + ";");
    return c.run([&](Check& c) {
        if (M.ring()->is_hypersurface()) return c.set(VerdictStatus::Inapplicable, "ring is not regular");
        if (M.is_zero()) return c.set(VerdictStatus::Inapplicable, "M is zero");
        int g = grade(M);
        c.fact("grade", g);
        c.fact("index", n);
        if (n < 1 || n > g) return c.set(VerdictStatus::Inapplicable, "index outside 1 <= n <= grade");
        const ExtTorTable& e = c.observe(ext(M, N, n));
        c.fact("ext_lengths", lengths_string(e));
        if (!e.at(n).zero) return c.set(VerdictStatus::Inapplicable, "Ext^n(M, N) != 0");
        const ExtTorTable& er = c.observe(ext(M, PresentedModule::free(M.ring(), {0}), n - 1));
        PresentedModule lhs = tensor_product(er.at(n - 1).module, N);
        const PresentedModule& rhs = e.at(n - 1).module;
        int lo = window_low(lhs, rhs);
        int hi = std::max(lo, c.opts().prefix_top);
        auto wl = lhs.hilbert_window(lo, hi);
        auto wr = rhs.hilbert_window(lo, hi);
        c.fact("window_start", lo);
        c.fact("tensor_window", window_string(wl));
        c.fact("ext_window", window_string(wr));
        if (wl != wr) return c.set(VerdictStatus::Fail, "Ext^{n-1}(M, R) (x) N and Ext^{n-1}(M, N) differ");
        c.genuine();
        c.set(VerdictStatus::Pass, "Ext^{n-1}(M, R) (x) N and Ext^{n-1}(M, N) have equal Hilbert prefixes");
    });
}

CheckVerdict check_chi_positivity(const PresentedModule& M, const PresentedModule& N, const CheckOptions& opts) {
    Check c("chi_positivity", *M.ring(), opts, {{"M", M}, {"N", N}}, "check chi_positivity M N;");
    return c.run([&](Check& c) {
        if (M.ring()->is_hypersurface()) return c.set(VerdictStatus::Inapplicable, "ring is not regular");
        FreeResolution res = minimal_resolution(M);
        int pd = *res.projective_dimension();
        c.fact("pdim", pd);
        if (pd < 0) return c.set(VerdictStatus::Inapplicable, "M is zero");
        const ExtTorTable& t = c.observe(tor(res, N, pd));
        c.fact("tor_lengths", lengths_string(t));
        std::string chis;
        bool any = false;
        for (int j = 0; j <= pd; ++j) {
            bool finite = true, vanish = true;
            for (int i = j; i <= pd; ++i) {
                finite = finite && t.at(i).length.is_finite();
                vanish = vanish && t.at(i).zero;
            }
            if (!finite) {
                chis += (chis.empty() ? "" : ",") + std::string("-");
                continue;
            }
            std::int64_t x = chi(t, j);
            chis += (chis.empty() ? "" : ",") + std::to_string(x);
            any = true;
            if (x < 0) {
                c.fact("chi", chis);
                c.fact("index", j);
                return c.set(VerdictStatus::Fail, "chi_" + std::to_string(j) + " < 0");
            }
            if (j >= 1 && (x == 0) != vanish) {
                c.fact("chi", chis);
                c.fact("index", j);
                return c.set(VerdictStatus::Fail, "chi_" + std::to_string(j) + " = 0 does not match vanishing of Tor_{>= j}");
            }
            if (j >= 1) c.genuine();
        }
        c.fact("chi", chis);
        if (!any) return c.set(VerdictStatus::Inapplicable, "no index with finite-length Tor tail");
        c.set(VerdictStatus::Pass, "chi_j >= 0 with matching vanishing for j >= 1");
    });
}

CheckVerdict check_xi_ext_bound(const PresentedModule& M, const PresentedModule& N, int i, const CheckOptions& opts) {
    Check c("xi_ext_bound", *M.ring(), opts, {{"M", M}, {"N", N}}, "check xi_ext_bound M N at " + std::to_string(i) + ";");
    return c.run([&](Check& c) {
        if (!M.ring()->is_hypersurface()) return c.set(VerdictStatus::Inapplicable, "ring is not a hypersurface");
        if (M.is_zero()) return c.set(VerdictStatus::Inapplicable, "M is zero");
        int g = grade(M);
        c.fact("grade", g);
        c.fact("index", i);
        if (i < 1 || i > g) return c.set(VerdictStatus::Inapplicable, "index outside 1 <= i <= grade");
        const ExtTorTable& er = c.observe(ext(M, N, i));
        c.fact("ext_R_lengths", lengths_string(er));
        if (er.finite_length_prefix() < i) return c.set(VerdictStatus::Inapplicable, "Ext_R^j(M, N) has infinite length for some j <= i");
        const ExtTorTable& eq = c.observe(ext(restrict_to_ambient(M), restrict_to_ambient(N), i));
        c.fact("ext_Q_lengths", lengths_string(eq));
        if (eq.finite_length_prefix() < i) return c.set(VerdictStatus::Inapplicable, "Ext_Q^j(M, N) has infinite length for some j <= i");
        std::int64_t xi = xi_bar(eq, i);
        c.fact("xi_bar_Q", xi);
        if (xi < 0) return c.set(VerdictStatus::Fail, "xi_bar_i over Q is negative");
        if (xi > er.at(i).length.value()) return c.set(VerdictStatus::Fail, "xi_bar_i over Q exceeds length Ext_R^i");
        c.genuine();
        c.set(VerdictStatus::Pass, "0 <= xi_bar_i over Q <= length Ext_R^i(M, N)");
    });
}

std::uint64_t SeededRandom::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int SeededRandom::range(int lo, int hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Polynomial random_form(const RingContext& ring, int d, SeededRandom& rng) {
    const auto& P = ring.polys();
    auto mons = monomials_of_degree(ring.num_variables(), d);
    if (mons.empty()) return P.zero();
    std::uint32_t p = ring.field().prime();
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Term> terms;
        for (const auto& m : mons)
            if (rng.chance(50)) terms.push_back({m, static_cast<Coeff>(rng.range(1, static_cast<int>(p - 1)))});
        if (terms.empty()) {
            const auto& m = mons[static_cast<std::size_t>(rng.range(0, static_cast<int>(mons.size()) - 1))];
            terms.push_back({m, static_cast<Coeff>(rng.range(1, static_cast<int>(p - 1)))});
        }
        Polynomial f = ring.reduce(P.from_terms(std::move(terms)));
        if (!f.is_zero()) return f;
    }
    return P.zero();
}

RingPtr random_hypersurface(std::uint32_t p, int nvars, int degree, SeededRandom& rng, ComputeLimits limits) {
    std::vector<std::string> names{"x", "y", "z", "w"};
    names.resize(static_cast<std::size_t>(nvars));
    RingPtr Q = make_ring(p, names, MonomialOrder::DegRevLex, limits);
    Polynomial f = random_form(*Q, degree, rng);
    return make_hypersurface(Q, f);
}

namespace {

PresentedModule candidate(const RandomModuleSpec& spec, SeededRandom& rng, bool finite_length) {
    const RingContext& ring = *spec.ring;
    const auto& P = ring.polys();
    int r = rng.range(spec.generators.first, spec.generators.second);
    int c = rng.range(spec.relations.first, spec.relations.second);
    std::vector<int> gdeg;
    for (int i = 0; i < r; ++i) gdeg.push_back(rng.chance(30) ? 1 : 0);
    int top = *std::max_element(gdeg.begin(), gdeg.end());
    std::vector<std::vector<Polynomial>> rows(static_cast<std::size_t>(r));
    for (int j = 0; j < c; ++j) {
        int D = top + rng.range(spec.entry_degrees.first, spec.entry_degrees.second);
        std::vector<Polynomial> col;
        bool nonzero = false;
        for (int i = 0; i < r; ++i) {
            Polynomial e = rng.chance(70) ? random_form(ring, D - gdeg[static_cast<std::size_t>(i)], rng) : P.zero();
            nonzero = nonzero || !e.is_zero();
            col.push_back(std::move(e));
        }
        if (!nonzero) {
            int i = rng.range(0, r - 1);
            col[static_cast<std::size_t>(i)] = random_form(ring, D - gdeg[static_cast<std::size_t>(i)], rng);
        }
        for (int i = 0; i < r; ++i) rows[static_cast<std::size_t>(i)].push_back(std::move(col[static_cast<std::size_t>(i)]));
    }
    if (finite_length) {
        for (int i = 0; i < r; ++i)
            for (int v = 0; v < ring.num_variables(); ++v) {
                int e = rng.range(2, 3);
                for (int k = 0; k < r; ++k)
                    rows[static_cast<std::size_t>(k)].push_back(k == i ? P.term(Monomial::variable(v, e), 1) : P.zero());
            }
    }
    // Columns that reduce to zero modulo f are harmless; inferred degrees keep them valid.
    return PresentedModule(matrix_with_inferred_sources(spec.ring, gdeg, rows));
}

std::optional<PresentedModule> syzygy_of(const PresentedModule& M, int k) {
    FreeResolution res = minimal_resolution(M, k + 1);
    auto degs = res.module_degrees(k);
    if (degs.empty()) return std::nullopt;
    if (k + 1 > res.length()) return PresentedModule::free(M.ring(), degs);
    return PresentedModule(res.differential(k + 1));
}

bool has_positive_grade(const PresentedModule& M) {
    FreeResolution res = minimal_resolution(M, 1);
    ExtTorTable t = ext(res, PresentedModule::free(M.ring(), {0}), 0);
    return t.at(0).zero;
}

}  // namespace

PresentedModule generate_module(const RandomModuleSpec& spec) {
    if (!spec.ring) throw std::invalid_argument("random module spec needs a ring");
    SeededRandom rng(spec.seed);
    for (int attempt = 0; attempt <= spec.resample_budget; ++attempt) {
        switch (spec.target) {
            case ModuleTarget::Generic: {
                PresentedModule M = minimal_presentation(candidate(spec, rng, false));
                if (!M.is_zero()) return M;
                break;
            }
            case ModuleTarget::FiniteLength: {
                PresentedModule M = minimal_presentation(candidate(spec, rng, true));
                if (!M.is_zero() && M.length().is_finite()) return M;
                break;
            }
            case ModuleTarget::PositiveGrade: {
                PresentedModule M = minimal_presentation(candidate(spec, rng, rng.chance(25)));
                if (!M.is_zero() && has_positive_grade(M)) return M;
                break;
            }
            case ModuleTarget::CohenMacaulay: {
                PresentedModule M = minimal_presentation(candidate(spec, rng, rng.chance(25)));
                if (!M.is_zero() && depth_and_dim(M).cohen_macaulay()) return M;
                break;
            }
            case ModuleTarget::Syzygy: {
                PresentedModule base = minimal_presentation(candidate(spec, rng, rng.chance(30)));
                if (base.is_zero()) break;
                int dim = spec.ring->dimension();
                // Syzygies of order >= dim R are maximal Cohen-Macaulay, the partners that make Ext vanish in range.
                int k = rng.range(std::max(1, dim), std::max(1, dim) + 1);
                auto S = syzygy_of(base, k);
                if (S && !S->is_zero()) return minimal_presentation(*S);
                break;
            }
        }
    }
    throw ShapingFailure("could not shape a " + to_string(spec.target) + " module within " +
                         std::to_string(spec.resample_budget) + " resamples");
}

int CampaignResult::count(VerdictStatus s) const {
    return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(), [&](const CheckVerdict& v) { return v.status == s; }));
}

int CampaignResult::genuine_passes() const {
    return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(), [](const CheckVerdict& v) {
        return v.status == VerdictStatus::Pass && v.genuine;
    }));
}

int CampaignResult::negative_controls() const {
    return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(), [](const CheckVerdict& v) { return v.negative_control; }));
}

namespace {

std::uint64_t trial_seed(std::uint64_t seed, int t) {
    SeededRandom mix(seed ^ (0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(t + 1)));
    return mix.next();
}

struct Trial {
    std::uint64_t seed;
    SeededRandom rng;
    const CampaignOptions& opts;

    RingPtr hypersurface() {
        if (opts.ring && opts.ring->is_hypersurface()) return opts.ring;
        int n = rng.chance(70) ? 3 : 2;
        int d = rng.range(2, 3);
        return random_hypersurface(opts.prime, n, d, rng, opts.limits);
    }
    RingPtr regular() {
        if (opts.ring && !opts.ring->is_hypersurface()) return opts.ring;
        int n = rng.range(2, 3);
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(static_cast<std::size_t>(n));
        return make_ring(opts.prime, names, MonomialOrder::DegRevLex, opts.limits);
    }
    PresentedModule module(const RingPtr& ring, ModuleTarget target) {
        RandomModuleSpec spec;
        spec.seed = rng.next();
        spec.ring = ring;
        spec.target = target;
        return generate_module(spec);
    }
    /// Second modules: mostly syzygy-derived.
    PresentedModule partner(const RingPtr& ring) {
        int roll = rng.range(0, 99);
        if (roll < 60) return module(ring, ModuleTarget::Syzygy);
        if (roll < 80) return module(ring, ModuleTarget::Generic);
        return module(ring, ModuleTarget::FiniteLength);
    }
    CheckOptions check() const {
        CheckOptions c = opts.check;
        c.seed = seed;
        return c;
    }
};

using TrialFn = std::vector<CheckVerdict> (*)(Trial&);

std::vector<CheckVerdict> rigidity_trial(Trial& t) {
    RingPtr R = t.hypersurface();
    PresentedModule M = t.module(R, t.rng.chance(70) ? ModuleTarget::FiniteLength : ModuleTarget::PositiveGrade);
    PresentedModule N = t.partner(R);
    return {check_ext_rigidity(M, N, t.check())};
}

std::vector<CheckVerdict> self_ext_trial(Trial& t) {
    RingPtr R = t.hypersurface();
    PresentedModule M = t.module(R, t.rng.chance(50) ? ModuleTarget::FiniteLength : ModuleTarget::PositiveGrade);
    return {check_self_ext_nonvanishing(M, t.check())};
}

std::vector<CheckVerdict> ext_tor_trial(Trial& t) {
    RingPtr Q = t.regular();
    std::optional<PresentedModule> M;
    for (int k = 0; k < 20 && !M; ++k) {
        PresentedModule cand = t.module(Q, t.rng.chance(60) ? ModuleTarget::FiniteLength : ModuleTarget::PositiveGrade);
        if (grade(cand) >= 2) M = cand;
    }
    if (!M) throw ShapingFailure("no module of grade >= 2 within 20 resamples");
    int roll = t.rng.range(0, 99);
    PresentedModule N = t.module(Q, roll < 50 ? ModuleTarget::Generic : roll < 75 ? ModuleTarget::FiniteLength : ModuleTarget::Syzygy);
    return {check_ext_tor_duality(*M, N, t.check())};
}

std::vector<CheckVerdict> chi_trial(Trial& t) {
    RingPtr Q = t.regular();
    PresentedModule M = t.module(Q, ModuleTarget::FiniteLength);
    PresentedModule N = t.module(Q, t.rng.chance(50) ? ModuleTarget::Generic : ModuleTarget::Syzygy);
    return {check_chi_positivity(M, N, t.check())};
}

std::vector<CheckVerdict> xi_chi_trial(Trial& t) {
    RingPtr Q = t.regular();
    PresentedModule M = t.module(Q, ModuleTarget::FiniteLength);
    PresentedModule N = t.partner(Q);
    int g = grade(M);
    std::vector<CheckVerdict> out;
    for (int i = 1; i <= g - 1; ++i) out.push_back(check_xi_chi_bridge(M, N, i, t.check()));
    if (out.empty()) out.push_back(check_xi_chi_bridge(M, N, 1, t.check()));
    return out;
}

std::vector<CheckVerdict> grade_drop_trial(Trial& t) {
    RingPtr R = t.hypersurface();
    int roll = t.rng.range(0, 99);
    PresentedModule M = t.module(R, roll < 40 ? ModuleTarget::Generic : roll < 70 ? ModuleTarget::FiniteLength : ModuleTarget::Syzygy);
    return {check_grade_drop(M, t.check())};
}

std::vector<CheckVerdict> theta_trial(Trial& t) {
    RingPtr R = t.hypersurface();
    // Finite projective dimension: R modulo generic linear forms (a regular sequence).
    int k = t.rng.range(1, R->dimension());
    std::vector<Polynomial> forms;
    for (int i = 0; i < k; ++i) forms.push_back(random_form(*R, 1, t.rng));
    std::vector<std::vector<Polynomial>> row{forms};
    PresentedModule M(matrix_with_inferred_sources(R, {0}, row));
    PresentedModule N = t.module(R, t.rng.chance(50) ? ModuleTarget::FiniteLength : ModuleTarget::Generic);
    return {check_tor_rigidity_theta(M, N, t.check())};
}

std::vector<CheckVerdict> ext_tensor_trial(Trial& t) {
    RingPtr Q = t.regular();
    PresentedModule M = t.module(Q, t.rng.chance(60) ? ModuleTarget::FiniteLength : ModuleTarget::PositiveGrade);
    PresentedModule N = t.partner(Q);
    int g = grade(M);
    return {check_ext_tensor_identity(M, N, t.rng.range(1, std::max(1, g)), t.check())};
}

std::vector<CheckVerdict> xi_bound_trial(Trial& t) {
    RingPtr R = t.hypersurface();
    PresentedModule M = t.module(R, ModuleTarget::FiniteLength);
    PresentedModule N = t.partner(R);
    int g = grade(M);
    return {check_xi_ext_bound(M, N, t.rng.range(1, std::max(1, g)), t.check())};
}

const std::vector<std::pair<std::string, TrialFn>>& campaigns() {
    static const std::vector<std::pair<std::string, TrialFn>> table{
        {"rigidity", rigidity_trial},       {"self_ext", self_ext_trial},       {"ext_tor", ext_tor_trial},
        {"chi_positivity", chi_trial},      {"xi_chi", xi_chi_trial},           {"grade_drop", grade_drop_trial},
        {"theta", theta_trial},             {"ext_tensor", ext_tensor_trial}, {"xi_ext_bound", xi_bound_trial},
    };
    return table;
}

CheckVerdict trial_error(const std::string& campaign, std::uint64_t seed, const std::string& what, VerdictStatus s) {
    CheckVerdict v;
    v.check_name = campaign;
    v.status = s;
    v.reason = what;
    v.provenance.seed = seed;
    return v;
}

}  // namespace

std::vector<std::string> campaign_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : campaigns()) out.push_back(name);
    return out;
}

CampaignResult run_campaign(const std::string& name, int trials, std::uint64_t seed, const CampaignOptions& opts) {
    const auto& table = campaigns();
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == name; });
    if (it == table.end()) throw std::invalid_argument("unknown campaign: " + name);
    if (trials < 0) throw std::invalid_argument("trial count must be non-negative");
    TrialFn fn = it->second;
    std::vector<std::vector<CheckVerdict>> results(static_cast<std::size_t>(trials));
    auto run_one = [&](int t) {
        std::uint64_t s = trial_seed(seed, t);
        Trial trial{s, SeededRandom(s), opts};
        try {
            results[static_cast<std::size_t>(t)] = fn(trial);
        } catch (const Inconclusive& e) {
            results[static_cast<std::size_t>(t)] = {trial_error(name, s, e.what(), VerdictStatus::Inconclusive)};
        } catch (const ShapingFailure& e) {
            results[static_cast<std::size_t>(t)] = {trial_error(name, s, e.what(), VerdictStatus::Inconclusive)};
        }
    };
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(trials, 1)));
    if (threads <= 1) {
        for (int t = 0; t < trials; ++t) run_one(t);
    } else {
        std::mutex m;
        int next = 0;
        std::exception_ptr failure;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                while (true) {
                    int t;
                    {
                        std::lock_guard lock(m);
                        if (next >= trials || failure) return;
                        t = next++;
                    }
                    try {
                        run_one(t);
                    } catch (...) {
                        std::lock_guard lock(m);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    CampaignResult out{name, seed, trials, {}};
    for (auto& r : results)
        for (auto& v : r) out.verdicts.push_back(std::move(v));
    return out;
}

}  // namespace hyperext

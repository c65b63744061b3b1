// One line per acceptance criterion; exit status 0 only if every line passes.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "hyperext/errors.hpp"
#include "hyperext/rigidity.hpp"
#include "hyperext/session.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace hyperext;

namespace {

constexpr std::uint64_t kSeed = 20261016;
/// Oracle window: this many degrees from the lowest generator degree.
constexpr int kOracleWidth = 5;
constexpr int kOracleMaxGeneratorDegree = 6;

struct CrossValidation {
    long tables = 0;
    long entries = 0;
    long skipped = 0;
    long mismatches = 0;
    std::string first_mismatch;

    void operator()(const ExtTorTable& t) {
        ++tables;
        for (const auto& e : t.entries) {
            const auto& gens = e.module.generator_degrees();
            int lo;
            if (!gens.empty()) {
                if (*std::max_element(gens.begin(), gens.end()) > kOracleMaxGeneratorDegree) {
                    ++skipped;
                    continue;
                }
                lo = e.module.min_generator_degree();
            } else {
                lo = e.outgoing.source.num_generators() ? e.outgoing.source.min_generator_degree() : 0;
                if (lo > kOracleMaxGeneratorDegree) {
                    ++skipped;
                    continue;
                }
            }
            int hi = lo + kOracleWidth - 1;
            ++entries;
            auto engine = e.module.hilbert_window(lo, hi);
            auto independent = oracle::homology_window(e.incoming, e.outgoing, lo, hi);
            if (engine != independent) {
                if (!mismatches) {
                    first_mismatch = to_string(t.kind) + " index " + std::to_string(e.index) + " over " + t.ring->description();
                }
                ++mismatches;
            }
        }
    }
};

CrossValidation g_cross;

CheckOptions observed() {
    CheckOptions o;
    o.observer = [](const ExtTorTable& t) { g_cross(t); };
    return o;
}

CampaignOptions campaign_options() {
    CampaignOptions o;
    o.threads = 1;
    o.check = observed();
    return o;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

int g_failures = 0;

void criterion(int number, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && s > limit_seconds) {
        o.pass = false;
        o.detail = "over the time limit";
    }
    if (!o.pass) ++g_failures;
    std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s)\n", o.pass ? "PASS" : "FAIL", number, name.c_str(), o.detail.c_str(), s,
                limit_seconds);
    std::fflush(stdout);
}

PresentedModule coker(const RingPtr& ring, const std::vector<std::string>& row) {
    std::vector<std::vector<Polynomial>> rows(1);
    for (const auto& e : row) rows[0].push_back(ring->polys().parse(e));
    return PresentedModule(matrix_with_inferred_sources(ring, {0}, rows));
}

std::string lengths(const ExtTorTable& t) {
    std::string out;
    for (const auto& e : t.entries) out += (out.empty() ? "" : ",") + e.length.to_string();
    return out;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// A * B and B * A equal f times the identity, by direct multiplication over Q.
bool factorization_holds(const MatrixFactorization& mf) {
    const auto& P = mf.A.ring()->polys();
    auto product_is_f = [&](const GradedFreeMap& X, const GradedFreeMap& Y) {
        if (X.cols() != Y.rows() || X.rows() != Y.cols()) return false;
        for (std::size_t i = 0; i < X.rows(); ++i)
            for (std::size_t j = 0; j < Y.cols(); ++j) {
                Polynomial s = P.zero();
                for (std::size_t k = 0; k < X.cols(); ++k) s = P.add(s, P.mul(X.entry(i, k), Y.entry(k, j)));
                Polynomial want = i == j ? mf.f : P.zero();
                if (!(s == want)) return false;
            }
        return true;
    };
    return product_is_f(mf.A, mf.B) && product_is_f(mf.B, mf.A);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    criterion(1, "torsion module x^2,xy,xz: pdim 3, Ext^2(M,Q) = 0, Ext^1(M,Q) != 0", 5, [] {
        Outcome o;
        for (std::uint32_t p : {32003u, 101u}) {
            auto Q = make_ring(p, {"x", "y", "z"});
            auto M = coker(Q, {"x^2", "x*y", "x*z"});
            auto pd = pdim(M);
            auto t = ext(M, PresentedModule::free(Q, {0}), 4);
            g_cross(t);
            std::string tag = "p=" + std::to_string(p);
            o.require(pd.kind == ProjectiveDimension::Kind::Finite && pd.value == 3, tag + " pdim " + pd.to_string());
            o.require(t.at(2).zero, tag + " Ext^2 nonzero");
            o.require(!t.at(1).zero, tag + " Ext^1 zero");
            if (o.pass) o.detail += (o.detail.empty() ? "" : "; ") + tag + " pdim 3, Ext lengths " + lengths(t);
        }
        return o;
    });

    criterion(2, "Koszul: Tor_i(k,k) = binomial(n,i), Ext^i(k,Q) != 0 only at i = n", 5, [] {
        Outcome o;
        for (int n : {2, 3}) {
            std::vector<std::string> vars{"x", "y", "z"};
            vars.resize(static_cast<std::size_t>(n));
            auto Q = make_ring(32003, vars);
            auto k = residue_field(Q);
            auto t = tor(k, k, n + 1);
            auto e = ext(k, PresentedModule::free(Q, {0}), n + 1);
            g_cross(t);
            g_cross(e);
            for (int i = 0; i <= n + 1; ++i) {
                o.require(t.at(i).length == Length::finite(binomial(n, i)), "n=" + std::to_string(n) + " Tor_" + std::to_string(i));
                o.require(e.at(i).zero == (i != n), "n=" + std::to_string(n) + " Ext^" + std::to_string(i));
            }
            if (o.pass) o.detail += (o.detail.empty() ? "" : "; ") + ("n=" + std::to_string(n) + " Tor " + lengths(t));
        }
        return o;
    });

    criterion(3, "Ext^i(M,N) vs Tor_{g-i}(E(M),N) on 100 pairs with grade >= 2", 600, [] {
        Outcome o;
        auto r = run_campaign("ext_tor", 100, kSeed, campaign_options());
        o.require(r.count(VerdictStatus::Fail) == 0, std::to_string(r.count(VerdictStatus::Fail)) + " mismatches");
        o.require(r.count(VerdictStatus::Pass) == 100,
                  "only " + std::to_string(r.count(VerdictStatus::Pass)) + " of 100 pairs compared");
        o.detail = o.pass ? "100 pairs, Hilbert prefixes through degree 10 agree" : o.detail;
        return o;
    });

    criterion(4, "chi_j >= 0 and xi_bar_i = chi_{g-i}(E(M),N) >= 0 with vanishing biconditional", 600, [] {
        Outcome o;
        auto c = run_campaign("chi_positivity", 100, kSeed, campaign_options());
        auto x = run_campaign("xi_chi", 100, kSeed + 1, campaign_options());
        o.require(c.count(VerdictStatus::Fail) == 0, "chi violation");
        o.require(x.count(VerdictStatus::Fail) == 0, "bridge violation");
        o.require(c.count(VerdictStatus::Pass) >= 100, "only " + std::to_string(c.count(VerdictStatus::Pass)) + " chi instances");
        o.require(x.count(VerdictStatus::Pass) >= 100, "only " + std::to_string(x.count(VerdictStatus::Pass)) + " bridge instances");
        if (o.pass)
            o.detail = std::to_string(c.count(VerdictStatus::Pass)) + " chi instances, " +
                       std::to_string(x.count(VerdictStatus::Pass)) + " bridge instances, zero violations";
        return o;
    });

    criterion(5, "Ext rigidity fuzz over hypersurfaces (200 trials)", 1800, [] {
        Outcome o;
        auto r = run_campaign("rigidity", 200, kSeed, campaign_options());
        std::ofstream log("acceptance_rigidity_verdicts.txt");
        for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
            const auto& v = r.verdicts[i];
            log << "trial " << i << " seed " << (v.provenance.seed ? std::to_string(*v.provenance.seed) : "-") << ": "
                << to_string(v.status) << (v.genuine ? " genuine" : "") << " | " << v.reason << '\n';
            for (const auto& [k, x] : v.witness.facts) log << "  " << k << " = " << x << '\n';
            log << v.witness.script << '\n';
        }
        o.require(r.count(VerdictStatus::Fail) == 0, std::to_string(r.count(VerdictStatus::Fail)) + " fail verdicts");
        o.require(r.count(VerdictStatus::Inconclusive) == 0, std::to_string(r.count(VerdictStatus::Inconclusive)) + " inconclusive");
        o.require(r.genuine_passes() >= 20, "only " + std::to_string(r.genuine_passes()) + " genuine passes; corpus shaping rejected");
        if (o.pass)
            o.detail = "0 fails, " + std::to_string(r.genuine_passes()) + " genuine passes, " +
                       std::to_string(r.count(VerdictStatus::Inapplicable)) + " inapplicable; log acceptance_rigidity_verdicts.txt";
        return o;
    });

    criterion(6, "Ext^i(M,M) != 0 for i <= grade (200 trials and R/z over xy)", 1800, [] {
        Outcome o;
        auto R = make_hypersurface(make_ring(32003, {"x", "y", "z"}), "x*y");
        auto M = coker(R, {"z"});
        auto v = check_self_ext_nonvanishing(M, observed());
        auto t = ext(M, M, 1);
        g_cross(t);
        o.require(v.status == VerdictStatus::Pass && !t.at(1).zero, "R/z instance did not pass");
        auto r = run_campaign("self_ext", 200, kSeed, campaign_options());
        o.require(r.count(VerdictStatus::Fail) == 0, std::to_string(r.count(VerdictStatus::Fail)) + " fail verdicts");
        if (o.pass)
            o.detail = "R/z: Ext^1 length " + t.at(1).length.to_string() + "; campaign " + std::to_string(r.count(VerdictStatus::Pass)) +
                       " pass, 0 fail";
        return o;
    });

    criterion(7, "theta(R/x,R/y) = 1, negative control, finite-pdim pairs, matrix factorizations", 300, [] {
        Outcome o;
        auto R = make_hypersurface(make_ring(32003, {"x", "y"}), "x*y");
        auto A = coker(R, {"x"}), B = coker(R, {"y"});
        auto th = theta(A, B);
        auto t = tor(A, B, 5);
        g_cross(t);
        o.require(th.value == 1, "theta = " + std::to_string(th.value));
        o.require(lengths(t) == "1,0,1,0,1,0", "Tor lengths " + lengths(t));
        auto control = check_tor_rigidity_theta(A, B, observed());
        o.require(control.negative_control && control.status == VerdictStatus::Inapplicable, "negative control not recorded");
        auto camp = run_campaign("theta", 40, kSeed, campaign_options());
        o.require(camp.count(VerdictStatus::Fail) == 0, "theta = 0 pair failed");
        o.require(camp.count(VerdictStatus::Pass) > 0, "no theta = 0 pair passed");

        int periodic = 0;
        auto check_resolution = [&](const PresentedModule& M) {
            FreeResolution res = minimal_resolution(M);
            if (!res.certificate()) return;
            ++periodic;
            o.require(res.factorization() && factorization_holds(*res.factorization()),
                      "factorization identity fails over " + M.ring()->description());
        };
        check_resolution(A);
        check_resolution(B);
        auto cone = make_hypersurface(make_ring(32003, {"x", "y", "z"}), "x^2 + y*z");
        check_resolution(residue_field(cone));
        check_resolution(residue_field(R));
        SeededRandom rng(kSeed);
        for (int i = 0; i < 30; ++i) {
            RandomModuleSpec spec;
            spec.seed = rng.next();
            spec.ring = random_hypersurface(32003, rng.chance(50) ? 2 : 3, rng.range(2, 3), rng);
            spec.target = i % 2 ? ModuleTarget::FiniteLength : ModuleTarget::Generic;
            try {
                check_resolution(generate_module(spec));
            } catch (const ShapingFailure&) {
            }
        }
        o.require(periodic >= 10, "only " + std::to_string(periodic) + " periodic resolutions");
        if (o.pass)
            o.detail = "Tor " + lengths(t) + ", control logged, " + std::to_string(camp.count(VerdictStatus::Pass)) +
                       " theta = 0 passes, " + std::to_string(periodic) + " factorizations verified";
        return o;
    });

    criterion(8, "grade_R M = grade_Q M - 1 on 100 random modules", 600, [] {
        Outcome o;
        auto r = run_campaign("grade_drop", 100, kSeed, campaign_options());
        o.require(r.count(VerdictStatus::Pass) == 100, std::to_string(100 - r.count(VerdictStatus::Pass)) + " modules disagree");
        if (o.pass) o.detail = "100 of 100 agree";
        return o;
    });

    criterion(9, "independent degreewise oracle reproduces every Ext/Tor Hilbert prefix", 600, [] {
        Outcome o;
        o.require(g_cross.entries > 0, "nothing was cross-validated");
        o.require(g_cross.mismatches == 0,
                  std::to_string(g_cross.mismatches) + " mismatches, first: " + g_cross.first_mismatch);
        if (o.pass)
            o.detail = std::to_string(g_cross.entries) + " modules from " + std::to_string(g_cross.tables) +
                       " tables agree over a " + std::to_string(kOracleWidth) + "-degree window (" +
                       std::to_string(g_cross.skipped) + " with generators above degree 6 skipped)";
        return o;
    });

    criterion(10, "fixture corpus twice gives byte-identical structured reports", 600, [] {
        Outcome o;
        std::vector<fs::path> scripts;
        for (const auto& e : fs::directory_iterator(HYPEREXT_FIXTURE_DIR))
            if (e.path().extension() == ".hx") scripts.push_back(e.path());
        std::sort(scripts.begin(), scripts.end());
        for (const auto& s : scripts) {
            SessionSettings settings;
            settings.input_name = s.filename().string();
            std::string text = slurp(s);
            std::string a = emit_report(run_source(text, settings), ReportFormat::Structured, false);
            std::string b = emit_report(run_source(text, settings), ReportFormat::Structured, false);
            o.require(a == b, s.filename().string() + " differs between runs");
        }
        o.require(!scripts.empty(), "no fixtures found");
        if (o.pass) o.detail = std::to_string(scripts.size()) + " fixtures identical";
        return o;
    });

    std::printf("%s: %d of 10 criteria failed\n", g_failures ? "FAILED" : "ALL PASSED", g_failures);
    return g_failures ? 1 : 0;
}

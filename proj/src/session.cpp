#include "hyperext/session.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperext/errors.hpp"
#include "hyperext/invariants.hpp"
#include "hyperext/resolution.hpp"
#include "hyperext/rigidity.hpp"

namespace hyperext {

ComputeLimits session_limits(const SessionSettings& s) {
    ComputeLimits l;
    l.degree_cap = s.degree_cap;
    l.length_cap = s.length_cap;
    l.gb_trace = s.gb_trace;
    return l;
}

namespace {

Json conventions() {
    Json c;
    c["grading"] = "standard grading, every variable in degree 1";
    c["presentation"] = "rows are generators, columns are relations; M = coker of the matrix";
    c["shift"] = "M(-d) has its generators moved up by d";
    c["ext"] = "Ext^i(M,N) = H^i(Hom(F,N)) for the minimal resolution F of M; Hom(R(-a),N) = N(a)";
    c["tor"] = "Tor_i(M,N) = H_i(F tensor N)";
    c["length"] = "k-dimension as an integer, or \"inf\"";
    c["hilbert"] = "values of the Hilbert function starting at hilbert_from";
    c["theta"] = "length Tor_{2j} - length Tor_{2j+1} for 2j past the start of periodicity";
    c["chi"] = "chi_j = sum over i >= j of (-1)^(i-j) length Tor_i";
    c["xi_bar"] = "xi_bar_j = sum over i <= j of (-1)^(j-i) length Ext^i";
    c["pdim"] = "integer, \"inf\" when periodicity is certified, or \"inconclusive\"";
    return c;
}

Json length_json(const Length& l) {
    if (l.is_finite()) return l.value();
    return "inf";
}

constexpr int kHilbertWidth = 6;

Json presentation_rows(const PresentedModule& M) {
    const GradedFreeMap& A = M.presentation();
    const auto& P = A.ring()->polys();
    Json rows = Json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(P.render(A.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json module_json(const PresentedModule& M) {
    Json j;
    j["generator_degrees"] = M.generator_degrees();
    j["presentation"] = presentation_rows(M);
    j["length"] = length_json(M.length());
    int lo = M.min_generator_degree();
    j["hilbert_from"] = lo;
    j["hilbert"] = M.hilbert_window(lo, lo + kHilbertWidth - 1);
    return j;
}

Json table_json(const ExtTorTable& t) {
    Json j;
    j["kind"] = to_string(t.kind);
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        Json x;
        x["index"] = e.index;
        x["length"] = length_json(e.length);
        x["zero"] = e.zero;
        x["generator_degrees"] = e.module.generator_degrees();
        int lo = e.module.min_generator_degree();
        x["hilbert_from"] = lo;
        x["hilbert"] = e.module.hilbert_window(lo, lo + kHilbertWidth - 1);
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json matrix_rows(const GradedFreeMap& A) {
    const auto& P = A.ring()->polys();
    Json rows = Json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(P.render(A.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json resolution_json(const FreeResolution& res) {
    Json j;
    BettiTable b = res.betti();
    j["betti"] = b.render();
    j["totals"] = b.totals();
    Json graded = Json::array();
    for (std::size_t i = 0; i < b.entries().size(); ++i)
        for (const auto& [d, n] : b.entries()[i]) graded.push_back(Json::array({static_cast<int>(i), d, n}));
    j["graded_betti"] = std::move(graded);
    j["length"] = res.length();
    j["terminated"] = res.terminated();
    auto pd = pdim(res);
    j["pdim"] = pd.kind == ProjectiveDimension::Kind::Finite ? Json(pd.value) : Json(pd.to_string());
    j["periodic_from"] = res.periodic_from() ? Json(*res.periodic_from()) : Json(nullptr);
    if (res.factorization()) {
        j["factorization_verified"] = res.factorization()->verify();
        j["factorization"] = {{"A", matrix_rows(res.factorization()->A)}, {"B", matrix_rows(res.factorization()->B)}};
    } else {
        j["factorization_verified"] = nullptr;
    }
    return j;
}

Json verdict_json(const CheckVerdict& v) {
    Json j;
    j["check"] = v.check_name;
    j["status"] = to_string(v.status);
    j["reason"] = v.reason;
    j["genuine"] = v.genuine;
    j["negative_control"] = v.negative_control;
    Json facts = Json::object();
    for (const auto& [k, x] : v.witness.facts) facts[k] = x;
    j["facts"] = std::move(facts);
    Json prov;
    prov["seed"] = v.provenance.seed ? Json(*v.provenance.seed) : Json(nullptr);
    prov["ring"] = v.provenance.ring;
    prov["degree_cap"] = v.provenance.degree_cap;
    prov["length_cap"] = v.provenance.length_cap;
    j["provenance"] = std::move(prov);
    j["witness"] = v.witness.script;
    return j;
}

std::string status_of(VerdictStatus s) { return to_string(s); }

class Runner {
public:
    Runner(const SessionSettings& s) : s_(s) {}

    ResultEntry run(const CommandStatement& c) {
        ResultEntry e;
        e.command = c.text;
        e.line = c.pos.line;
        e.kind = c.verb;
        e.status = "ok";
        try {
            dispatch(c, e);
        } catch (const HypothesisViolation& x) {
            e.status = "inapplicable";
            e.payload = {{"error", x.what()}};
        } catch (const Inconclusive& x) {
            e.status = "inconclusive";
            e.payload = {{"error", x.what()}};
        } catch (const std::exception& x) {
            e.status = "error";
            e.payload = {{"error", x.what()}};
        }
        return e;
    }

private:
    long long option(const CommandStatement& c, const char* key, long long fallback) const {
        auto it = c.options.find(key);
        return it == c.options.end() ? fallback : it->second;
    }

    void dispatch(const CommandStatement& c, ResultEntry& e) {
        const auto& ops = c.operands;
        const std::string& v = c.verb;
        Json& p = e.payload;
        int n = ops.empty() ? 0 : ops[0].ring()->num_variables();
        if (v == "resolve") {
            std::optional<int> cap;
            if (c.options.count("length")) cap = static_cast<int>(c.options.at("length"));
            p = resolution_json(minimal_resolution(ops[0], cap));
        } else if (v == "ext" || v == "tor") {
            int m = static_cast<int>(option(c, "max", n + 1));
            p = table_json(v == "ext" ? ext(ops[0], ops[1], m) : tor(ops[0], ops[1], m));
        } else if (v == "grade") {
            p["value"] = grade(ops[0]);
        } else if (v == "pdim") {
            auto pd = pdim(ops[0]);
            p["value"] = pd.kind == ProjectiveDimension::Kind::Finite ? Json(pd.value) : Json(pd.to_string());
        } else if (v == "theta") {
            auto t = theta(ops[0], ops[1]);
            p["value"] = t.value;
            p["stable_index"] = t.stable_index;
            p["periodic_from"] = t.periodic_from ? Json(*t.periodic_from) : Json(nullptr);
            p["finite_pdim"] = t.finite_pdim;
        } else if (v == "chi") {
            if (ops[0].ring()->is_hypersurface()) throw HypothesisViolation("chi is defined over a regular ring");
            Json values = Json::object();
            if (c.options.count("at")) {
                int j = static_cast<int>(c.options.at("at"));
                values[std::to_string(j)] = chi(ops[0], ops[1], j);
            } else {
                FreeResolution res = minimal_resolution(ops[0]);
                int pd = *res.projective_dimension();
                ExtTorTable t = tor(res, ops[1], std::max(pd, 0));
                for (int j = 0; j <= std::max(pd, 0); ++j) {
                    bool finite = true;
                    for (int i = j; i <= t.max_index(); ++i) finite = finite && t.at(i).length.is_finite();
                    values[std::to_string(j)] = finite ? Json(chi(t, j)) : Json("inf");
                }
            }
            p["values"] = std::move(values);
        } else if (v == "xibar") {
            Json values = Json::object();
            int top = static_cast<int>(option(c, "at", n));
            ExtTorTable t = ext(ops[0], ops[1], top);
            int from = c.options.count("at") ? top : 0;
            for (int j = from; j <= top; ++j) {
                bool finite = t.finite_length_prefix() >= j;
                values[std::to_string(j)] = finite ? Json(xi_bar(t, j)) : Json("inf");
            }
            p["values"] = std::move(values);
        } else if (v == "emodule") {
            int g = grade(ops[0]);
            p["grade"] = g;
            p["module"] = module_json(e_module(ops[0], g));
        } else if (v == "hilbert") {
            int lo = static_cast<int>(option(c, "from", ops[0].min_generator_degree()));
            int hi = static_cast<int>(option(c, "to", lo + 9));
            if (hi < lo) throw std::invalid_argument("'to' is below 'from'");
            p["from"] = lo;
            p["values"] = ops[0].hilbert_window(lo, hi);
            p["length"] = length_json(ops[0].length());
            p["krull_dimension"] = ops[0].krull_dimension();
        } else if (v == "depth") {
            auto d = depth_and_dim(ops[0]);
            p["depth"] = d.depth;
            p["dimension"] = d.dimension;
            p["cohen_macaulay"] = d.cohen_macaulay();
        } else if (v == "invariants") {
            auto r = invariant_report(ops[0], ops[1]);
            p["grade"] = r.grade;
            p["pdim"] = r.pdim.kind == ProjectiveDimension::Kind::Finite ? Json(r.pdim.value) : Json(r.pdim.to_string());
            p["theta"] = r.theta ? Json(*r.theta) : Json(nullptr);
            Json chis = Json::object(), xis = Json::object();
            for (const auto& [j, x] : r.chi) chis[std::to_string(j)] = x;
            for (const auto& [j, x] : r.xi_bar) xis[std::to_string(j)] = x;
            p["chi"] = std::move(chis);
            p["xi_bar"] = std::move(xis);
            p["notes"] = r.notes;
        } else if (v == "check") {
            CheckVerdict verdict = run_check(c);
            e.status = status_of(verdict.status);
            p = verdict_json(verdict);
            if (verdict.status == VerdictStatus::Fail) dump_witness(verdict, c.target + "-line" + std::to_string(c.pos.line));
        } else if (v == "campaign") {
            run_campaign_command(c, e);
        } else {
            throw std::invalid_argument("unknown command " + v);
        }
    }

    CheckOptions check_options() const {
        CheckOptions o;
        o.seed = s_.seed;
        return o;
    }

    CheckVerdict run_check(const CommandStatement& c) {
        const auto& ops = c.operands;
        const std::string& t = c.target;
        CheckOptions o = check_options();
        int at = static_cast<int>(option(c, "at", 1));
        if (t == "ext_rigidity") return check_ext_rigidity(ops[0], ops[1], o);
        if (t == "self_ext") return check_self_ext_nonvanishing(ops[0], o);
        if (t == "tor_rigidity") return check_tor_rigidity_theta(ops[0], ops[1], o);
        if (t == "ext_tor") return check_ext_tor_duality(ops[0], ops[1], o);
        if (t == "grade_drop") return check_grade_drop(ops[0], o);
        if (t == "xi_chi") return check_xi_chi_bridge(ops[0], ops[1], at, o);
        if (t == "ext_tensor") return check_ext_tensor_identity(ops[0], ops[1], at, o);
        if (t == "chi_positivity") return check_chi_positivity(ops[0], ops[1], o);
        if (t == "xi_ext_bound") return check_xi_ext_bound(ops[0], ops[1], at, o);
        throw std::invalid_argument("unknown check " + t);
    }

    void run_campaign_command(const CommandStatement& c, ResultEntry& e) {
        CampaignOptions o;
        o.limits = session_limits(s_);
        o.threads = s_.gb_trace ? 1 : s_.threads;
        o.ring = c.over_ring;
        int trials = static_cast<int>(option(c, "trials", s_.trials));
        std::uint64_t seed = c.options.count("seed") ? static_cast<std::uint64_t>(c.options.at("seed")) : s_.seed;
        CampaignResult r = run_campaign(c.target, trials, seed, o);
        Json& p = e.payload;
        p["campaign"] = r.name;
        p["trials"] = r.trials;
        p["seed"] = r.seed;
        p["counts"] = {{"pass", r.count(VerdictStatus::Pass)},
                       {"fail", r.count(VerdictStatus::Fail)},
                       {"inapplicable", r.count(VerdictStatus::Inapplicable)},
                       {"inconclusive", r.count(VerdictStatus::Inconclusive)}};
        p["genuine_passes"] = r.genuine_passes();
        p["negative_controls"] = r.negative_controls();
        Json verdicts = Json::array();
        for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
            verdicts.push_back(verdict_json(r.verdicts[i]));
            if (r.verdicts[i].status == VerdictStatus::Fail)
                dump_witness(r.verdicts[i], r.name + "-line" + std::to_string(c.pos.line) + "-" + std::to_string(i));
        }
        p["verdicts"] = std::move(verdicts);
        if (r.count(VerdictStatus::Fail))
            e.status = "fail";
        else if (r.count(VerdictStatus::Inconclusive))
            e.status = "inconclusive";
        else
            e.status = "ok";
    }

    void dump_witness(const CheckVerdict& v, const std::string& stem) {
        if (!s_.witness_dir || v.witness.script.empty()) return;
        std::filesystem::create_directories(*s_.witness_dir);
        std::ofstream out(std::filesystem::path(*s_.witness_dir) / (stem + ".hx"));
        out << "# " << v.check_name << ": " << v.reason << '\n';
        if (v.provenance.seed) out << "# seed " << *v.provenance.seed << '\n';
        out << v.witness.script;
    }

    const SessionSettings& s_;
};

Json ring_json(const std::string& name, const RingContext& ring) {
    Json j;
    j["name"] = name;
    j["description"] = ring.description();
    j["prime"] = ring.field().prime();
    j["variables"] = ring.polys().variables();
    j["order"] = std::string(to_string(ring.polys().order()));
    j["relation"] = ring.is_hypersurface() ? Json(ring.polys().render(*ring.hypersurface())) : Json(nullptr);
    j["dimension"] = ring.dimension();
    return j;
}

}  // namespace

Report run_script(const SessionScript& script, const SessionSettings& s) {
    using Clock = std::chrono::steady_clock;
    auto start = Clock::now();
    Report r;
    r.tool_version = std::string(tool_version());
    r.settings["input"] = s.input_name;
    r.settings["seed"] = s.seed;
    r.settings["degree_cap"] = s.degree_cap;
    r.settings["length_cap"] = s.length_cap ? Json(*s.length_cap) : Json("variables+6");
    r.settings["trials"] = s.trials;
    r.conventions = conventions();
    Runner runner(s);
    for (const auto& st : script.statements) {
        if (const auto* rs = std::get_if<RingStatement>(&st)) {
            r.rings.push_back(ring_json(rs->name, *rs->ring));
        } else if (const auto* ms = std::get_if<ModuleStatement>(&st)) {
            Json j;
            j["name"] = ms->name;
            j["ring"] = ms->ring_name;
            j["generator_degrees"] = ms->module.generator_degrees();
            j["relations"] = static_cast<int>(ms->module.presentation().cols());
            j["presentation"] = presentation_rows(ms->module);
            r.modules.push_back(std::move(j));
        } else {
            const auto& cs = std::get<CommandStatement>(st);
            auto t0 = Clock::now();
            ResultEntry e = runner.run(cs);
            e.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            r.results.push_back(std::move(e));
        }
    }
    r.total_wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
}

Report run_source(std::string_view text, const SessionSettings& settings) {
    return run_script(parse_script(text, session_limits(settings)), settings);
}

}  // namespace hyperext

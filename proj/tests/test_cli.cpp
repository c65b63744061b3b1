#include <random>

#include "doctest.h"
#include "hyperext/session.hpp"

using namespace hyperext;

namespace {

SourcePos error_at(std::string_view text) {
    try {
        parse_script(text);
    } catch (const ScriptError& e) {
        return e.pos();
    }
    FAIL("script parsed without error");
    return {};
}

std::string error_message(std::string_view text) {
    try {
        parse_script(text);
    } catch (const ScriptError& e) {
        return e.message();
    }
    return "";
}

constexpr const char* kTorsion =
    "ring Q = poly(p=32003, vars=[x,y,z]);\n"
    "module M over Q = coker [[x^2, x*y, x*z]];\n";

}  // namespace

TEST_CASE("ring and module declarations") {
    auto s = parse_script("ring Q = poly(p=101, vars=[x,y,z]);");
    REQUIRE(s.statements.size() == 1);
    const auto& r = std::get<RingStatement>(s.statements[0]);
    CHECK(r.name == "Q");
    CHECK(r.ring->field().prime() == 101);
    CHECK(r.ring->num_variables() == 3);

    auto t = parse_script(std::string(kTorsion) + "ring S = poly(p=2, vars=[a,b], order=lex);\nring R = S / (a*b);\n");
    const auto& m = std::get<ModuleStatement>(t.statements[1]);
    CHECK(m.module.num_generators() == 1);
    CHECK(m.module.presentation().cols() == 3);
    const auto& q = std::get<RingStatement>(t.statements[3]);
    CHECK(q.ring->is_hypersurface());
    CHECK(q.ring->polys().order() == MonomialOrder::Lex);
}

TEST_CASE("rows are generators and columns are relations") {
    auto s = parse_script(
        "ring Q = poly(p=7, vars=[x,y]);\n"
        "module G over Q = coker [[x, y^2, 0], [0, y, x]] degrees [0, 1];\n");
    const auto& m = std::get<ModuleStatement>(s.statements[1]).module;
    CHECK(m.num_generators() == 2);
    CHECK(m.presentation().cols() == 3);
    CHECK(m.generator_degrees() == std::vector<int>{0, 1});
    CHECK(m.presentation().source_degrees() == std::vector<int>{1, 2, 2});
}

TEST_CASE("free modules and zero modules") {
    auto s = parse_script(
        "ring Q = poly(p=7, vars=[x]);\n"
        "module F over Q = coker [[], []] degrees [0, 2];\n"
        "module Z over Q = coker [];\n");
    CHECK(std::get<ModuleStatement>(s.statements[1]).module.num_generators() == 2);
    CHECK(std::get<ModuleStatement>(s.statements[2]).module.is_zero());
}

TEST_CASE("diagnostics carry line and column") {
    auto p = error_at("ring Q = poly(p=101, vars=[x,y]);\nmodule M over Q = coker [[x + 1, y]];\n");
    CHECK(p.line == 2);
    CHECK(p.column == 27);
    CHECK(error_message("ring Q = poly(p=101, vars=[x,y]);\nmodule M over Q = coker [[x + 1, y]];\n") ==
          "entry not homogeneous");

    p = error_at("ring Q = poly(p=101, vars=[x,y]);\nmodule M over Q = coker [[x], [y^2]];\n");
    CHECK(p.line == 2);
    CHECK(p.column == 32);

    p = error_at("ring Q = poly(p=101, vars=[x,y]);\nmodule M over Q = coker [[x + w]];\n");
    CHECK(p.line == 2);
    CHECK(p.column == 31);

    CHECK(error_message("ext M Q;") == "undeclared name 'M'");
    CHECK(error_message("ring Q = poly(p=100, vars=[x]);") == "p must be a prime below 2^31");
    CHECK(error_message("ring Q = poly(p=5, vars=[x,x]);") == "duplicate variable 'x'");
    CHECK(error_message("ring Q = poly(p=5, vars=[x]);\nring Q = poly(p=5, vars=[y]);") ==
          "name 'Q' is already declared");
    CHECK(error_message("ring Q = poly(p=5, vars=[x]);\nring R = Q / (x);") ==
          "hypersurface relation must have degree >= 2 (got 1)");
    CHECK(error_message(std::string(kTorsion) + "frobnicate M;").find("unknown statement") == 0);
    CHECK(error_message(std::string(kTorsion) + "check nope M;") == "unknown check 'nope'");
    CHECK(error_message("campaign nope trials 3;") == "unknown campaign 'nope'");
    CHECK(error_message(std::string(kTorsion) + "ext M Q length 3;") == "unexpected 'length' in ext");
    CHECK(error_message(std::string(kTorsion) + "grade M") == "expected ';' but found end of input");
    CHECK(error_message(std::string(kTorsion) + "module G over Q = coker [[x], [y, z]];") ==
          "row 2 has 2 entries, expected 1");
    CHECK(error_message(std::string(kTorsion) + "module G over Q = coker [[x]] degrees [0, 1];") ==
          "2 degrees for 1 generators");
    CHECK(error_message(std::string(kTorsion) + "ring S = poly(p=5, vars=[x]);\nmodule N over S = coker [[x]];\next M N;")
              .find("different ring") != std::string::npos);
}

TEST_CASE("commands resolve operands and record canonical text") {
    auto s = parse_script(std::string(kTorsion) + "ext   M  Q max 4 ;\ncampaign rigidity trials 3 seed 7 over Q;\n");
    const auto& c = std::get<CommandStatement>(s.statements[2]);
    CHECK(c.text == "ext M Q max 4");
    CHECK(c.pos.line == 3);
    CHECK(c.operands.size() == 2);
    CHECK(c.operands[1].num_generators() == 1);
    CHECK(c.options.at("max") == 4);
    const auto& k = std::get<CommandStatement>(s.statements[3]);
    CHECK(k.text == "campaign rigidity trials 3 seed 7 over Q");
    CHECK(k.over_ring);
}

TEST_CASE("random token streams always produce a diagnostic, never a crash") {
    const std::vector<std::string> tokens{"ring", "module", "Q",   "M",  "=",  "poly", "(", ")",   "[",     "]",
                                          ",",    ";",      "p=7", "x",  "y",  "x^2",  "/", "over", "coker", "ext",
                                          "tor",  "check",  "1",   "-3", "vars", "degrees", "*", "+", "campaign", "#"};
    std::mt19937 gen(1234);
    for (int trial = 0; trial < 400; ++trial) {
        std::string text = trial % 2 ? "ring Q = poly(p=7, vars=[x,y]);\n" : "";
        int len = static_cast<int>(gen() % 14) + 1;
        for (int i = 0; i < len; ++i) text += tokens[gen() % tokens.size()] + (gen() % 5 ? " " : "\n");
        try {
            parse_script(text);
        } catch (const ScriptError& e) {
            CHECK(e.pos().line >= 1);
            CHECK(e.pos().column >= 1);
        }
    }
}

TEST_CASE("running a script fills results and statuses") {
    SessionSettings settings;
    Report r = run_source(std::string(kTorsion) + "pdim M;\next M Q max 4;\ncheck ext_rigidity M Q;\n", settings);
    REQUIRE(r.results.size() == 3);
    CHECK(r.results[0].payload.at("value") == 3);
    const auto& entries = r.results[1].payload.at("entries");
    CHECK(entries[2].at("length") == 0);
    CHECK(entries[1].at("length") == "inf");
    CHECK(r.results[2].status == "inapplicable");
    CHECK(exit_code(r) == 0);
    CHECK(r.rings.size() == 1);
    CHECK(r.modules[0].at("presentation")[0][1] == "x*y");
}

TEST_CASE("engine errors become per-command entries") {
    SessionSettings settings;
    settings.degree_cap = 2;
    Report r = run_source(std::string(kTorsion) + "resolve M;\ntheta M M;\n", settings);
    CHECK(r.results[0].status == "inconclusive");
    CHECK(r.results[1].status == "inapplicable");
    CHECK(exit_code(r) == 2);
}

TEST_CASE("empty session gives a header-only report") {
    Report r = run_source("", SessionSettings{});
    CHECK(r.results.empty());
    std::string text = emit_report(r, ReportFormat::Text, false);
    CHECK(text.find("hyperext") == 0);
    Json j = to_json(r, false);
    CHECK(j.at("results").empty());
    CHECK_FALSE(j.contains("volatile"));
}

TEST_CASE("structured reports round-trip") {
    SessionSettings settings;
    Report r = run_source(std::string(kTorsion) + "resolve M;\ngrade M;\ncampaign grade_drop trials 2 seed 1;\n", settings);
    std::string once = emit_report(r, ReportFormat::Structured);
    Report back = report_from_json(Json::parse(once));
    CHECK(emit_report(back, ReportFormat::Structured) == once);
    CHECK(emit_report(back, ReportFormat::Text) == emit_report(r, ReportFormat::Text));
    Json bad = Json::parse(once);
    bad["schema_version"] = 99;
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
}

TEST_CASE("identical scripts give identical stable reports") {
    SessionSettings settings;
    std::string script = std::string(kTorsion) + "ext M Q max 3;\ncampaign rigidity trials 3 seed 9;\n";
    std::string a = emit_report(run_source(script, settings), ReportFormat::Structured, false);
    std::string b = emit_report(run_source(script, settings), ReportFormat::Structured, false);
    CHECK(a == b);
}

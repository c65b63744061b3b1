#include "hyperext/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hyperext {

std::string_view tool_version() { return "0.1.0"; }

Json to_json(const Report& report, bool include_volatile) {
    Json j;
    j["schema_version"] = report.schema_version;
    j["tool_version"] = report.tool_version;
    j["settings"] = report.settings;
    j["conventions"] = report.conventions;
    j["rings"] = report.rings;
    j["modules"] = report.modules;
    Json results = Json::array();
    for (const auto& r : report.results) {
        Json e;
        e["command"] = r.command;
        e["line"] = r.line;
        e["kind"] = r.kind;
        e["status"] = r.status;
        e["result"] = r.payload;
        results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    if (include_volatile) {
        Json times = Json::array();
        for (const auto& r : report.results) times.push_back(r.wall_ms);
        j["volatile"] = {{"wall_ms", std::move(times)}, {"total_wall_ms", report.total_wall_ms}};
    }
    return j;
}

Report report_from_json(const Json& j) {
    try {
        Report r;
        r.schema_version = j.at("schema_version").get<int>();
        if (r.schema_version != kReportSchemaVersion)
            throw std::invalid_argument("unsupported report schema version " + std::to_string(r.schema_version));
        r.tool_version = j.at("tool_version").get<std::string>();
        r.settings = j.at("settings");
        r.conventions = j.at("conventions");
        r.rings = j.at("rings");
        r.modules = j.at("modules");
        for (const auto& e : j.at("results")) {
            ResultEntry x;
            x.command = e.at("command").get<std::string>();
            x.line = e.at("line").get<int>();
            x.kind = e.at("kind").get<std::string>();
            x.status = e.at("status").get<std::string>();
            x.payload = e.at("result");
            r.results.push_back(std::move(x));
        }
        if (j.contains("volatile")) {
            const Json& v = j.at("volatile");
            const Json& times = v.at("wall_ms");
            if (times.size() != r.results.size()) throw std::invalid_argument("volatile wall_ms has the wrong length");
            for (std::size_t i = 0; i < times.size(); ++i) r.results[i].wall_ms = times[i].get<double>();
            r.total_wall_ms = v.at("total_wall_ms").get<double>();
        }
        return r;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

namespace {

std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void render_table(std::ostream& out, const Json& p, const char* symbol, bool upper) {
    for (const auto& e : p.at("entries")) {
        std::string label = std::string(symbol) + (upper ? "^" : "_") + std::to_string(e.at("index").get<int>());
        out << "  " << label << std::string(label.size() < 8 ? 8 - label.size() : 1, ' ') << "length " << scalar(e.at("length"));
        if (e.contains("hilbert") && !e.at("zero").get<bool>()) {
            out << "  hilbert from " << e.at("hilbert_from").get<int>() << ":";
            for (const auto& h : e.at("hilbert")) out << ' ' << h.get<long long>();
        }
        out << '\n';
    }
}

void render_generic(std::ostream& out, const Json& p, const std::string& indent) {
    for (const auto& [k, v] : p.items()) {
        if (v.is_object() && !v.empty()) {
            out << indent << k << ":\n";
            render_generic(out, v, indent + "  ");
        } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
            out << indent << k << ":\n";
            for (const auto& x : v) out << indent << "  " << x.dump() << '\n';
        } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
            out << indent << k << ":\n";
            std::istringstream lines(v.get<std::string>());
            for (std::string line; std::getline(lines, line);) out << indent << "  | " << line << '\n';
        } else {
            out << indent << k << ": " << scalar(v) << '\n';
        }
    }
}

void render_verdict(std::ostream& out, const Json& v, const std::string& indent) {
    out << indent << v.at("check").get<std::string>() << ": " << v.at("status").get<std::string>();
    if (v.at("genuine").get<bool>()) out << " (genuine)";
    if (v.at("negative_control").get<bool>()) out << " (negative control)";
    out << '\n' << indent << "  reason: " << v.at("reason").get<std::string>() << '\n';
    for (const auto& [k, x] : v.at("facts").items()) out << indent << "  " << k << " = " << scalar(x) << '\n';
}

std::string text_report(const Report& r, bool include_volatile) {
    std::ostringstream out;
    out << "hyperext " << r.tool_version << " (report schema " << r.schema_version << ")\n";
    out << "settings:";
    for (const auto& [k, v] : r.settings.items()) out << ' ' << k << '=' << scalar(v);
    out << '\n';
    for (const auto& ring : r.rings)
        out << "ring " << ring.at("name").get<std::string>() << " = " << ring.at("description").get<std::string>() << '\n';
    for (const auto& m : r.modules) {
        out << "module " << m.at("name").get<std::string>() << " over " << m.at("ring").get<std::string>() << ": "
            << "generator degrees " << m.at("generator_degrees").dump() << ", relations "
            << m.at("relations").get<int>() << '\n';
    }
    for (const auto& e : r.results) {
        out << "\n[line " << e.line << "] " << e.command << "\n  status: " << e.status << '\n';
        const Json& p = e.payload;
        if (p.contains("error")) {
            out << "  error: " << p.at("error").get<std::string>() << '\n';
        } else if (e.kind == "resolve") {
            std::istringstream lines(p.at("betti").get<std::string>());
            for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
            out << "  pdim: " << scalar(p.at("pdim")) << "  periodic_from: " << scalar(p.at("periodic_from"))
                << "  factorization_verified: " << scalar(p.at("factorization_verified")) << '\n';
        } else if (e.kind == "ext" || e.kind == "tor") {
            render_table(out, p, e.kind == "ext" ? "Ext" : "Tor", e.kind == "ext");
        } else if (e.kind == "check") {
            render_verdict(out, p, "  ");
        } else if (e.kind == "campaign") {
            out << "  trials: " << p.at("trials") << "  seed: " << p.at("seed") << '\n';
            out << "  counts:";
            for (const auto& [k, v] : p.at("counts").items()) out << ' ' << k << '=' << v.get<int>();
            out << "\n  genuine_passes: " << p.at("genuine_passes") << "  negative_controls: " << p.at("negative_controls")
                << '\n';
            for (const auto& v : p.at("verdicts"))
                if (v.at("status") == "fail" || v.at("status") == "inconclusive" || v.at("negative_control").get<bool>())
                    render_verdict(out, v, "  ");
        } else {
            render_generic(out, p, "  ");
        }
    }
    if (include_volatile) {
        out << "\nvolatile:\n";
        for (const auto& e : r.results) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.1f", e.wall_ms);
            out << "  [line " << e.line << "] " << buf << " ms\n";
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", r.total_wall_ms);
        out << "  total " << buf << " ms\n";
    }
    return out.str();
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format, bool include_volatile) {
    if (format == ReportFormat::Structured) return to_json(report, include_volatile).dump(2) + "\n";
    return text_report(report, include_volatile);
}

int exit_code(const Report& report) {
    auto any = [&](const char* s) {
        return std::any_of(report.results.begin(), report.results.end(), [&](const ResultEntry& e) { return e.status == s; });
    };
    if (any("fail")) return 1;
    if (any("inconclusive")) return 2;
    if (any("error")) return 3;
    return 0;
}

}  // namespace hyperext

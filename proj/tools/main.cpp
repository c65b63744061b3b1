#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperext/session.hpp"

int main(int argc, char** argv) {
    using namespace hyperext;
    CLI::App app{"Graded Ext/Tor computations and rigidity checks over polynomial rings and hypersurfaces"};
    std::string input = "-";
    std::string format = "text";
    std::string output;
    std::string witness_dir;
    SessionSettings settings;
    int length_cap = 0;
    bool trace_gb = false;
    bool omit_volatile = false;
    app.add_option("-i,--input", input, "Script file, or - for standard input");
    app.add_option("-f,--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("-o,--output", output, "Write the report here instead of standard output");
    app.add_option("--seed", settings.seed, "Default seed for checks and campaigns");
    app.add_option("--degree-cap", settings.degree_cap, "Gröbner degree cap")->check(CLI::PositiveNumber);
    app.add_option("--length-cap", length_cap, "Resolution length cap (default: variables + 6)")->check(CLI::PositiveNumber);
    app.add_option("--trials", settings.trials, "Default campaign trial count")->check(CLI::NonNegativeNumber);
    app.add_option("--threads", settings.threads, "Campaign worker threads (0: hardware concurrency)");
    app.add_option("--witness-dir", witness_dir, "Directory for replayable fail witnesses");
    app.add_flag("--trace-gb", trace_gb, "Print Gröbner basis traces to standard error");
    app.add_flag("--omit-volatile", omit_volatile, "Leave wall times out of the report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }
    if (length_cap > 0) settings.length_cap = length_cap;
    if (!witness_dir.empty()) settings.witness_dir = witness_dir;
    if (trace_gb) settings.gb_trace = &std::cerr;

    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
        settings.input_name = "<stdin>";
    } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read " << input << '\n';
            return 3;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        settings.input_name = input;
    }

    Report report;
    try {
        report = run_source(text, settings);
    } catch (const ScriptError& e) {
        std::cerr << settings.input_name << ':' << e.pos().line << ':' << e.pos().column << ": error: " << e.message() << '\n';
        return 3;
    }
    std::string rendered =
        emit_report(report, format == "structured" ? ReportFormat::Structured : ReportFormat::Text, !omit_volatile);
    if (output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << output << '\n';
            return 3;
        }
        out << rendered;
    }
    return exit_code(report);
}

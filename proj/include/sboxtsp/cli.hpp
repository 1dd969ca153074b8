#pragma once

// Command-line front end. Kept in a header so tests can drive the commands
// with in-memory streams.

#include "chaos.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"
#include "report.hpp"
#include "sbox.hpp"
#include "sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace sboxtsp::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseFailure = 2,
    kValidationFailure = 3,
    kPipelineFailure = 4,
    kIoFailure = 5,
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decimal ("0.3") or an IEEE-754 bit pattern ("0x3fd3333333333333" or 16 bare
/// hex digits).
inline double parse_real(std::string_view text) {
    const bool prefixed = text.starts_with("0x") || text.starts_with("0X");
    const bool bare_hex = text.size() == 16 && std::all_of(text.begin(), text.end(), [](char c) {
                              return std::isxdigit(static_cast<unsigned char>(c)) != 0;
                          });
    return (prefixed || bare_hex) ? double_from_hex(text) : double_from_decimal(text);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(content.data(), static_cast<std::streamsize>(content.size()))) {
        throw IoError("cannot write '" + path + "'");
    }
}

inline SBox load_grid(const std::string& path, bool hex) {
    return parse_grid(read_file(path), hex ? GridRadix::hex : GridRadix::decimal);
}

struct GenerateOptions {
    std::string x0, p, x0_hex, p_hex;
    std::string out, trace;
    bool snapshots = false;
    bool hex = false;
    bool json = false;
};

inline int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
    const bool have_hex = !o.x0_hex.empty() || !o.p_hex.empty();
    const bool have_dec = !o.x0.empty() || !o.p.empty();
    if (have_hex == have_dec) {
        err << "error: give either --x0/--p or --x0-hex/--p-hex\n";
        return kUsage;
    }
    const auto params = have_hex ? ChaosParams::from_hex(o.x0_hex, o.p_hex)
                                 : ChaosParams(parse_real(o.x0), parse_real(o.p));
    const auto result = generate_sbox(params);

    std::string grid = "# x0_hex=" + params.x0_hex() + " p_hex=" + params.p_hex() + "\n";
    grid += format_grid(result.sbox, o.hex ? GridRadix::hex : GridRadix::decimal);
    write_file(o.out, grid);
    if (!o.trace.empty()) {
        write_file(o.trace, to_json(result.trace, o.snapshots).dump(2) + "\n");
    }

    const auto report = analyze(result.sbox);
    if (o.json) {
        out << json{{"params", to_json(params)}, {"metrics", to_json(report)}}.dump(2) << "\n";
    } else {
        out << "params: x0=" << double_to_decimal(params.x0()) << " (" << params.x0_hex()
            << ") p=" << double_to_decimal(params.p()) << " (" << params.p_hex() << ")\n";
        out << format_report(report, "Generated");
    }
    return kOk;
}

inline int cmd_analyze(const std::string& path, bool hex, bool as_json, std::ostream& out,
                       std::ostream& err) {
    const auto s = load_grid(path, hex);
    const auto report = analyze(s);
    if (!report.bijective) {
        err << "warning: S-box is not bijective (duplicate values)\n";
    }
    if (as_json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << format_report(report);
    }
    return kOk;
}

inline int cmd_compare(const std::string& path, bool hex, std::ostream& out, std::ostream& err) {
    const auto s = load_grid(path, hex);
    const auto report = analyze(s);
    if (!report.bijective) {
        err << "warning: S-box is not bijective (duplicate values)\n";
    }
    out << format_comparison(comparison_rows(report));
    return kOk;
}

struct SweepOptions {
    std::size_t count = 0;
    std::size_t top = 10;
    std::string out;
    std::vector<std::string> params;  // "x0,p" pairs
    unsigned jobs = 1;
};

inline std::vector<ChaosParams> sweep_params(const SweepOptions& o) {
    if (o.params.empty()) {
        return halton_grid(o.count);
    }
    std::vector<ChaosParams> list;
    for (const auto& spec : o.params) {
        const auto comma = spec.find(',');
        if (comma == std::string::npos) {
            throw ParseError("--param expects 'x0,p', got '" + spec + "'");
        }
        list.emplace_back(parse_real(std::string_view(spec).substr(0, comma)),
                          parse_real(std::string_view(spec).substr(comma + 1)));
    }
    return list;
}

inline int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
    const auto params = sweep_params(o);
    if (params.empty()) {
        err << "error: sweep needs --count > 0 or at least one --param\n";
        return kUsage;
    }
    const auto entries = run_sweep(params, o.jobs);

    std::string lines;
    std::size_t failures = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        lines += to_json(entries[k], k + 1).dump() + "\n";
        if (!entries[k].metrics) {
            ++failures;
        }
    }
    write_file(o.out, lines);

    std::vector<NonlinearityRow> rows;
    for (std::size_t k = 0; k < entries.size() && rows.size() < o.top; ++k) {
        if (entries[k].metrics) {
            rows.push_back(nonlinearity_row("#" + std::to_string(k + 1) + " " +
                                                entries[k].params.x0_hex() + "/" +
                                                entries[k].params.p_hex(),
                                            *entries[k].metrics));
        }
    }
    out << format_comparison(rows);
    out << entries.size() - failures << " succeeded, " << failures << " failed\n";
    for (const auto& e : entries) {
        if (!e.metrics) {
            err << "failed: x0_hex=" << e.params.x0_hex() << " p_hex=" << e.params.p_hex() << ": "
                << e.error << "\n";
        }
    }
    return kOk;
}

/// Parses `args` (without the program name) and runs the chosen command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chaos + TSP 8x8 S-box generator and analyzer", "sboxtsp"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Generate an S-box from chaos parameters");
    auto* x0_opt = generate->add_option("--x0", gen.x0, "Initial condition (decimal or hex bits)");
    auto* p_opt = generate->add_option("--p", gen.p, "Control parameter (decimal or hex bits)");
    generate->add_option("--x0-hex", gen.x0_hex, "Initial condition as 16 hex digits")->excludes(x0_opt);
    generate->add_option("--p-hex", gen.p_hex, "Control parameter as 16 hex digits")->excludes(p_opt);
    generate->add_option("--out", gen.out, "Output S-box grid")->required();
    generate->add_option("--trace", gen.trace, "Write the generation trace as JSON");
    generate->add_flag("--snapshots", gen.snapshots, "Include per-window S-box snapshots in the trace");
    generate->add_flag("--hex", gen.hex, "Write the grid in hex");
    generate->add_flag("--json", gen.json, "Print the metrics report as JSON");

    std::string analyze_path;
    bool analyze_hex = false;
    bool analyze_json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Score an S-box grid");
    analyze_cmd->add_option("path", analyze_path, "S-box grid file")->required();
    analyze_cmd->add_flag("--hex", analyze_hex, "Grid values are hex");
    analyze_cmd->add_flag("--json", analyze_json, "Print the report as JSON");

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "Generate and rank many parameter pairs");
    sweep->add_option("--count", sw.count, "Number of low-discrepancy grid points");
    sweep->add_option("--param", sw.params, "Explicit 'x0,p' pair (repeatable; replaces the grid)");
    sweep->add_option("--top", sw.top, "Rows to print")->capture_default_str();
    sweep->add_option("--out", sw.out, "Ranked results, one JSON object per line")->required();
    sweep->add_option("--jobs", sw.jobs, "Worker threads")->capture_default_str();

    std::string compare_path;
    bool compare_hex = false;
    auto* compare = app.add_subcommand("compare", "Compare nonlinearity with published S-boxes");
    compare->add_option("path", compare_path, "S-box grid file")->required();
    compare->add_flag("--hex", compare_hex, "Grid values are hex");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(gen, out, err);
        }
        if (analyze_cmd->parsed()) {
            return cmd_analyze(analyze_path, analyze_hex, analyze_json, out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sw, out, err);
        }
        return cmd_compare(compare_path, compare_hex, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const IterationCapError& e) {
        err << "generation failed: " << e.what() << "\n";
        return kPipelineFailure;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoFailure;
    }
}

} // namespace sboxtsp::cli

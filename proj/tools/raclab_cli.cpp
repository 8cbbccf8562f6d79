// raclab: random access code benchmarks from the command line.
//
// Subcommands mirror the library engines: `table1` reproduces the full
// benchmark table, the rest expose one engine each. Output is JSON by
// default (diff-able; identical seeds give identical documents up to the
// timing field), CSV for the table layout, or a short pretty format.
// Exit codes: 0 success, 2 contract violation, 3 work-cap refusal.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "raclab/errors.hpp"
#include "raclab/reports.hpp"
#include "raclab/version.hpp"

namespace {

using raclab::Json;
using raclab::RunReport;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format: json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write output to PATH instead of stdout");
}

void write_output(const OutputOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(opts.out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + opts.out_path);
    file << text;
    if (text.empty() || text.back() != '\n') file << '\n';
}

std::string pretty_values(const RunReport& report) {
    std::string out = report.command + " (n=" + std::to_string(report.scenario.n) +
                      ", d=" + std::to_string(report.scenario.d) + ")\n";
    for (const auto& [key, value] : report.values.items()) {
        out += "  " + key + ": ";
        if (value.is_object() && value.contains("decimal")) {
            out += value["decimal"].get<std::string>();
            if (value.contains("rational")) out += " = " + value["rational"].get<std::string>();
            if (value.contains("note")) out += " (" + value["note"].get<std::string>() + ")";
        } else {
            out += value.dump();
        }
        out += "\n";
    }
    return out;
}

void emit_report(RunReport report, double seconds, const OutputOptions& opts) {
    report.timing_seconds = seconds;
    if (opts.format == "pretty") {
        write_output(opts, pretty_values(report));
    } else if (opts.format == "csv") {
        std::string csv = "key,value\n";
        for (const auto& [key, value] : report.values.items()) {
            if (value.is_object() && value.contains("decimal"))
                csv += key + "," + value["decimal"].get<std::string>() + "\n";
            else
                csv += key + "," + value.dump() + "\n";
        }
        write_output(opts, csv);
    } else {
        write_output(opts, raclab::to_json(report).dump(2));
    }
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random access code benchmarks: classical, prepare-and-measure, Bell-assisted"};
    app.set_version_flag("--version", raclab::kVersion);
    app.require_subcommand(1);

    std::size_t opt_n = 2, opt_d = 3, opt_restarts = 20;
    std::uint64_t opt_seed = 1;

    OutputOptions table1_out;
    auto* cmd_table1 = app.add_subcommand("table1", "All five benchmark rows");
    cmd_table1->add_option("--restarts", opt_restarts, "See-saw restarts per row")->capture_default_str();
    cmd_table1->add_option("--seed", opt_seed, "See-saw seed")->capture_default_str();
    add_output_flags(cmd_table1, table1_out);

    OutputOptions qcrac_out;
    auto* cmd_qcrac = app.add_subcommand("qcrac", "Two-dit prepare-and-measure protocol");
    cmd_qcrac->add_option("--d", opt_d, "Alphabet size")->capture_default_str();
    add_output_flags(cmd_qcrac, qcrac_out);

    OutputOptions classical_out;
    auto* cmd_classical = app.add_subcommand("classical", "Exact brute-force classical optimum");
    cmd_classical->add_option("--n", opt_n, "Data dits")->capture_default_str();
    cmd_classical->add_option("--d", opt_d, "Alphabet size")->capture_default_str();
    add_output_flags(cmd_classical, classical_out);

    OutputOptions seesaw_out;
    auto* cmd_seesaw = app.add_subcommand("seesaw", "See-saw lower bound on the Bell RAC value");
    cmd_seesaw->add_option("--n", opt_n, "Data dits")->capture_default_str();
    cmd_seesaw->add_option("--d", opt_d, "Alphabet size")->capture_default_str();
    cmd_seesaw->add_option("--restarts", opt_restarts, "Random restarts")->capture_default_str();
    cmd_seesaw->add_option("--seed", opt_seed, "Seed")->capture_default_str();
    bool no_witness = false;
    cmd_seesaw->add_flag("--no-witness", no_witness, "Omit the witness strategy from the report");
    add_output_flags(cmd_seesaw, seesaw_out);

    OutputOptions earac_out;
    auto* cmd_earac = app.add_subcommand("earac-explicit", "The explicit 7/9 strategy");
    add_output_flags(cmd_earac, earac_out);

    OutputOptions concat_out;
    auto* cmd_concat = app.add_subcommand("concat", "Two-level code concatenation");
    add_output_flags(cmd_concat, concat_out);

    CLI11_PARSE(app, argc, argv);

    try {
        Timer timer;
        if (cmd_table1->parsed()) {
            std::vector<RunReport> rows = raclab::report_table1(opt_seed, opt_restarts);
            const double seconds = timer.seconds();
            if (table1_out.format == "csv") {
                write_output(table1_out, raclab::table1_csv(rows));
            } else if (table1_out.format == "pretty") {
                write_output(table1_out, raclab::table1_pretty(rows));
            } else {
                Json doc = Json::array();
                for (auto& row : rows) {
                    row.timing_seconds = seconds;
                    doc.push_back(raclab::to_json(row));
                }
                write_output(table1_out, doc.dump(2));
            }
        } else if (cmd_qcrac->parsed()) {
            RunReport report = raclab::report_qcrac(opt_d);
            emit_report(std::move(report), timer.seconds(), qcrac_out);
        } else if (cmd_classical->parsed()) {
            RunReport report = raclab::report_classical(opt_n, opt_d);
            emit_report(std::move(report), timer.seconds(), classical_out);
        } else if (cmd_seesaw->parsed()) {
            RunReport report = raclab::report_seesaw(opt_n, opt_d, opt_restarts, opt_seed, !no_witness);
            emit_report(std::move(report), timer.seconds(), seesaw_out);
        } else if (cmd_earac->parsed()) {
            RunReport report = raclab::report_earac_explicit();
            emit_report(std::move(report), timer.seconds(), earac_out);
        } else if (cmd_concat->parsed()) {
            RunReport report = raclab::report_concat();
            emit_report(std::move(report), timer.seconds(), concat_out);
        }
    } catch (const raclab::ContractViolation& err) {
        std::cerr << "contract violation: " << err.what() << "\n";
        return 2;
    } catch (const raclab::InstanceTooLarge& err) {
        std::cerr << "instance too large: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

// bwmul: build, verify, render, measure and emit the unified multiplier.
//
// Exit codes: 0 success / all checks passed, 1 verification failures,
// 2 usage or input errors. Standard output carries the data; diagnostics
// go to standard error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bwmul/bitvec.hpp"
#include "bwmul/metrics.hpp"
#include "bwmul/mulcore.hpp"
#include "bwmul/netlist.hpp"
#include "bwmul/oracle.hpp"
#include "bwmul/ppgen.hpp"
#include "bwmul/reduce.hpp"

namespace {

using namespace bwmul;

// Operand text: decimal (sign allowed where the mode reads the operand as
// signed) or 0x-prefixed hex taken as raw bits.
BitVec parse_operand(const std::string& text, int n, bool is_signed)
{
    if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
        std::uint64_t raw = 0;
        std::size_t used = 0;
        raw = std::stoull(text.substr(2), &used, 16);
        if (used != text.size() - 2)
            throw std::invalid_argument("bad hex operand: " + text);
        return encode_unsigned(raw & bit_mask(n), n);
    }
    std::size_t used = 0;
    long long v = std::stoll(text, &used, 10);
    if (used != text.size())
        throw std::invalid_argument("bad operand: " + text);
    return is_signed ? encode_signed(v, n) : encode_unsigned(static_cast<std::uint64_t>(v), n);
}

std::string with_row_labels(const std::string& grid)
{
    std::istringstream ss(grid);
    std::string line, out;
    int row = 0;
    while (std::getline(ss, line))
        out += "row " + std::to_string(row++) + " |" + line + "\n";
    return out;
}

int cmd_verify(int width, const std::string& mode, const std::string& reducer, bool exhaustive,
               std::optional<std::uint64_t> random_count, std::uint64_t seed, bool serial)
{
    Width n(width);
    ReducerKind kind = parse_reducer(reducer);
    if (exhaustive == random_count.has_value())
        throw std::invalid_argument("choose exactly one of --exhaustive and --random COUNT");

    std::vector<Mode> modes;
    if (mode == "all")
        modes = {Mode::Unsigned, Mode::Signed, Mode::Mixed};
    else
        modes = {parse_mode(mode)};

    Exec exec = serial ? Exec::Serial : Exec::Parallel;
    VerifyReport report = exhaustive ? verify_exhaustive(n, kind, exec, modes)
                                     : verify_random(n, *random_count, seed, kind, exec, modes);

    std::printf("%llu cases, %llu failures\n",
                static_cast<unsigned long long>(report.total_cases),
                static_cast<unsigned long long>(report.failures.size()));
    std::fputs(report.to_text().c_str(), stdout);
    return report.pass() ? 0 : 1;
}

int cmd_trace(int width, const std::string& a_text, const std::string& b_text,
              const std::string& mode_text, const std::string& reducer, bool show_reduction)
{
    Width n(width);
    Mode mode = parse_mode(mode_text);
    ReducerKind kind = parse_reducer(reducer);

    // a is the multiplier; it is read as signed only in the all-signed mode.
    BitVec a = parse_operand(a_text, n.n(), mode == Mode::Signed);
    BitVec b = parse_operand(b_text, n.n(), mode != Mode::Unsigned);

    PPMatrix m = mode == Mode::Unsigned ? pp_unsigned(a, b)
               : mode == Mode::Signed   ? pp_signed(a, b)
                                        : pp_mixed(a, b);
    auto [product, trace] = reduce_traced(m, kind);

    auto operand_value = [](const BitVec& v, bool is_signed) {
        return is_signed ? std::to_string(decode_signed(v)) : std::to_string(decode_unsigned(v));
    };
    std::printf("scheme=%s n=%d\n", to_string(mode), n.n());
    std::printf("a=%s (%s, multiplier)\n", a.to_string().c_str(),
                operand_value(a, mode == Mode::Signed).c_str());
    std::printf("b=%s (%s, multiplicand)\n", b.to_string().c_str(),
                operand_value(b, mode != Mode::Unsigned).c_str());
    std::printf("\n%s\n", with_row_labels(render_scheme(static_cast<Scheme>(mode), n.n())).c_str());
    std::fputs(with_row_labels(render_cells(m)).c_str(), stdout);
    std::string pv = mode == Mode::Unsigned ? std::to_string(decode_unsigned(product))
                                            : std::to_string(decode_signed(product));
    std::printf("\nproduct=%s (=%s)\n", product.to_string().c_str(), pv.c_str());
    if (show_reduction) {
        std::printf("\nreducer=%s\n", to_string(kind));
        std::fputs(to_text(trace).c_str(), stdout);
    }
    return 0;
}

int cmd_emit(int width, const std::string& reducer, const std::string& format,
             const std::string& out_path, bool expand_cells)
{
    Width n(width);
    Netlist nl = build_netlist(n, parse_reducer(reducer));
    if (expand_cells)
        nl = expand(nl);
    std::string text = emit(nl, parse_emit_format(format));
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::invalid_argument("cannot open output file: " + out_path);
        out << text;
    }
    return 0;
}

int cmd_report(int width, const std::string& reducer, const std::string& cost_model_path,
               const std::string& out_path)
{
    Width n(width);
    GateCostModel model;
    if (!cost_model_path.empty())
        model = GateCostModel::from_file(cost_model_path);
    AreaReport report = compare(n, parse_reducer(reducer), model);
    std::fputs(report.to_text().c_str(), stdout);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::invalid_argument("cannot open output file: " + out_path);
        out << report.to_json();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"unified Baugh-Wooley multiplier construction kit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check schemes against the integer oracle");
    int v_width = 0;
    std::string v_mode = "all", v_reducer = "wallace";
    bool v_exhaustive = false, v_serial = false;
    std::optional<std::uint64_t> v_random;
    std::uint64_t v_seed = 42;
    verify->add_option("--width", v_width, "operand width n")->required();
    verify->add_option("--mode", v_mode)->check(CLI::IsMember({"unsigned", "signed", "mixed", "all"}));
    verify->add_option("--reducer", v_reducer)->check(CLI::IsMember({"ripple", "wallace", "dadda"}));
    verify->add_flag("--exhaustive", v_exhaustive, "sweep all operand pairs (n <= 12)");
    verify->add_option("--random", v_random, "number of random operand pairs");
    verify->add_option("--seed", v_seed, "seed for --random");
    verify->add_flag("--serial", v_serial, "use the serial reference driver");

    // trace
    auto* trace = app.add_subcommand("trace", "render a partial-product tableau");
    int t_width = 0;
    std::string t_a, t_b, t_mode, t_reducer = "wallace";
    bool t_show_reduction = false;
    trace->add_option("--width", t_width)->required();
    trace->add_option("--a", t_a, "multiplier value")->required();
    trace->add_option("--b", t_b, "multiplicand value")->required();
    trace->add_option("--mode", t_mode)->required()
        ->check(CLI::IsMember({"unsigned", "signed", "mixed"}));
    trace->add_option("--reducer", t_reducer)->check(CLI::IsMember({"ripple", "wallace", "dadda"}));
    trace->add_flag("--show-reduction", t_show_reduction, "append the reduction trace");

    // emit
    auto* emit_cmd = app.add_subcommand("emit", "emit a gate-level netlist");
    int e_width = 0;
    std::string e_reducer = "wallace", e_format, e_out;
    bool e_expand = false;
    emit_cmd->add_option("--width", e_width)->required();
    emit_cmd->add_option("--reducer", e_reducer)->check(CLI::IsMember({"ripple", "wallace", "dadda"}));
    emit_cmd->add_option("--format", e_format)->required()
        ->check(CLI::IsMember({"structural-hdl", "gate-list"}));
    emit_cmd->add_option("--out", e_out, "output file (default: standard output)");
    emit_cmd->add_flag("--expand", e_expand, "decompose HA/FA cells into 2-input gates");

    // report
    auto* report = app.add_subcommand("report", "print the gate-count area report");
    int r_width = 0;
    std::string r_reducer = "wallace", r_cost_model, r_out;
    report->add_option("--width", r_width)->required();
    report->add_option("--reducer", r_reducer)->check(CLI::IsMember({"ripple", "wallace", "dadda"}));
    report->add_option("--cost-model", r_cost_model, "key=value file overriding default costs");
    report->add_option("--out", r_out, "also write the report as JSON to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(v_width, v_mode, v_reducer, v_exhaustive, v_random, v_seed, v_serial);
        if (trace->parsed())
            return cmd_trace(t_width, t_a, t_b, t_mode, t_reducer, t_show_reduction);
        if (emit_cmd->parsed())
            return cmd_emit(e_width, e_reducer, e_format, e_out, e_expand);
        if (report->parsed())
            return cmd_report(r_width, r_reducer, r_cost_model, r_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}

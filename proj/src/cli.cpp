#include "planar/cli.hpp"

#include "planar/circuit.hpp"
#include "planar/compiler.hpp"
#include "planar/encodings.hpp"
#include "planar/reduction.hpp"
#include "planar/term.hpp"
#include "planar/typing.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace planar {

namespace {

// Raised for any problem with the user's input; carries the message only.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Term load_term(const std::string& path)
{
    const std::string text = read_file(path);
    try {
        return parse_term(text, constant_resolver());
    } catch (const ParseError& e) {
        throw InputError(path + ":" + e.what());
    }
}

Circuit load_circuit(const std::string& path)
{
    const std::string text = read_file(path);
    try {
        return parse_circuit(text);
    } catch (const CircuitError& e) {
        throw InputError(path + ":" + e.what());
    }
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw InputError(path + ": cannot write file");
    }
}

int cmd_check(const std::string& path, bool planar_mode, std::ostream& out)
{
    const Term t = load_term(path);
    if (!planar_mode) {
        const LinearityReport r = check_linear(t);
        if (r.linear()) {
            out << "linear\n";
            return exit_yes;
        }
        out << "not linear\n";
        for (const auto& w : r.witnesses) {
            out << "witness: " << format_witness(w) << "\n";
        }
        return exit_no;
    }
    const PlanarVerdict v = infer_planar_context(t);
    if (v.ok()) {
        out << "planar\n";
        out << "context: " << format_context(v.context()) << "\n";
        return exit_yes;
    }
    const PlanarFailure& f = v.failure();
    out << "not planar\n";
    out << "at: " << format_path(f.at) << "\n";
    out << "subterm: " << print_term(t.at(f.at)) << "\n";
    out << "reason: " << f.reason << "\n";
    return exit_no;
}

int cmd_normalize(const std::string& path, bool trace, std::optional<std::size_t> fuel, std::ostream& out,
                  std::ostream& err)
{
    const Term t = load_term(path);
    NormalizeOptions options;
    options.fuel = fuel;
    options.detail = trace ? TraceDetail::full : TraceDetail::none;
    try {
        const NormalizationTrace result = normalize(t, options);
        for (std::size_t k = 0; k < result.steps.size(); ++k) {
            out << format_trace_line(k + 1, result.steps[k]) << "\n";
        }
        out << "normal form: " << print_term(result.final) << "\n";
        out << "steps: " << result.step_count << "\n";
        return exit_yes;
    } catch (const FuelExhausted& e) {
        err << "error: fuel exhausted after " << e.steps() << " steps\n";
        err << "last term: " << print_term(e.last()) << "\n";
        return exit_input_error;
    }
}

int cmd_equiv(const std::string& a, const std::string& b, std::ostream& out, std::ostream& err)
{
    const Term t = load_term(a);
    const Term u = load_term(b);
    for (const auto& [path, term] : {std::pair{a, t}, std::pair{b, u}}) {
        const LinearityReport r = check_linear(term);
        if (!r.linear()) {
            err << "error: " << path << ": term is not linear\n";
            for (const auto& w : r.witnesses) {
                err << "witness: " << format_witness(w) << "\n";
            }
            return exit_input_error;
        }
    }
    if (beta_convertible(t, u)) {
        out << "convertible\n";
        return exit_yes;
    }
    out << "not convertible\n";
    out << "left: " << print_term(normalize(t).final) << "\n";
    out << "right: " << print_term(normalize(u).final) << "\n";
    return exit_no;
}

int bit_status(Bit b)
{
    return b == Bit::one ? exit_yes : exit_no;
}

std::string default_prefix(const std::string& path)
{
    std::filesystem::path p(path);
    return p.replace_extension().string();
}

int cmd_circuit(const std::string& action, const std::string& path, const std::string& prefix, std::ostream& out,
                std::ostream& err)
{
    const Circuit c = load_circuit(path);
    if (action == "eval") {
        const Evaluation e = eval_circuit(c);
        out << to_char(e.final) << "\n";
        return bit_status(e.final);
    }
    if (action == "compile") {
        out << print_term(compile_circuit(c)) << "\n";
        return exit_yes;
    }
    if (action == "run") {
        const Bit expected = eval_circuit(c).final;
        RunSummary run{};
        try {
            run = run_compiled(c);
        } catch (const DecodeError& e) {
            err << "invariant violation: compiled term does not decode: " << e.what() << "\n";
            return exit_invariant;
        }
        out << to_char(run.bit) << "\n";
        out << "steps: " << run.step_count << "\n";
        out << "initial size: " << run.initial_size << "\n";
        out << "peak size: " << run.peak_size << "\n";
        if (run.bit != expected) {
            err << "invariant violation: compiled value " << to_char(run.bit) << " differs from circuit value "
                << to_char(expected) << "\n";
            return exit_invariant;
        }
        return bit_status(run.bit);
    }
    // emit-equiv
    const auto [t, u] = emit_equiv_instance(c);
    const std::string base = prefix.empty() ? default_prefix(path) : prefix;
    const std::string t_path = base + ".t.lam";
    const std::string u_path = base + ".u.lam";
    write_file(t_path, print_term(t) + "\n");
    write_file(u_path, print_term(u) + "\n");
    out << t_path << "\n" << u_path << "\n";
    return exit_yes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Planar lambda-calculus toolkit", "planar"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Decide linearity or planarity of a term file");
    bool linear_flag = false;
    bool planar_flag = false;
    std::string check_file;
    auto* lin_opt = check->add_flag("--linear", linear_flag, "Check linearity");
    auto* pla_opt = check->add_flag("--planar", planar_flag, "Check planarity and infer the context");
    lin_opt->excludes(pla_opt);
    check->add_option("FILE", check_file, "Term file")->required();

    auto* norm = app.add_subcommand("normalize", "Normalize a term (leftmost-outermost)");
    bool trace_flag = false;
    std::optional<std::size_t> fuel;
    std::string norm_file;
    norm->add_flag("--trace", trace_flag, "Print one line per reduction step");
    norm->add_option("--fuel", fuel, "Step budget for non-linear terms")->check(CLI::PositiveNumber);
    norm->add_option("FILE", norm_file, "Term file")->required();

    auto* equiv = app.add_subcommand("equiv", "Decide beta-convertibility of two linear terms");
    std::string equiv_a;
    std::string equiv_b;
    equiv->add_option("FILE1", equiv_a, "First term file")->required();
    equiv->add_option("FILE2", equiv_b, "Second term file")->required();

    auto* circ = app.add_subcommand("circuit", "Evaluate, compile or run a circuit");
    std::string action;
    std::string circ_file;
    std::string prefix;
    circ->add_option("ACTION", action, "eval | compile | run | emit-equiv")
        ->required()
        ->check(CLI::IsMember({"eval", "compile", "run", "emit-equiv"}));
    circ->add_option("FILE", circ_file, "Circuit file")->required();
    circ->add_option("--out", prefix, "Output prefix for emit-equiv");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_yes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_yes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return exit_input_error;
    }

    try {
        if (*check) {
            if (!linear_flag && !planar_flag) {
                err << "error: check needs --linear or --planar\n";
                return exit_input_error;
            }
            return cmd_check(check_file, planar_flag, out);
        }
        if (*norm) {
            return cmd_normalize(norm_file, trace_flag, fuel, out, err);
        }
        if (*equiv) {
            return cmd_equiv(equiv_a, equiv_b, out, err);
        }
        return cmd_circuit(action, circ_file, prefix, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_invariant;
    }
}

}  // namespace planar

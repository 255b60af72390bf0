#include "report.hpp"

#include "coalg/closure.hpp"
#include "coalg/constructions.hpp"
#include "coalg/dual.hpp"
#include "coalg/identities.hpp"
#include "coalg/spec_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace coalg;
using cli::Report;

namespace {

struct SpecSource {
    std::string example;
    std::string file;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--example", example, "builtin example name (see list-examples)");
        cmd->add_option("--spec", file, "spec file (JSON)");
    }

    CoalgebraSpec load(Report& r) const
    {
        if (example.empty() == file.empty())
            throw CLI::ValidationError("give exactly one of --example or --spec");
        if (!example.empty()) {
            CoalgebraSpec s = builtin(example);
            r.has_spec = true;
            r.spec = {s.name(), "builtin", ""};
            return s;
        }
        std::ifstream in(file, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        CoalgebraSpec s = load_spec_file(file);
        r.has_spec = true;
        r.spec = {s.name(), "file", fnv1a64_hex(buf.str())};
        return s;
    }
};

std::size_t edit_distance(const std::string& a, const std::string& b)
{
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

// Named checks beyond the identity catalog, with the catalog identities they run.
const std::vector<std::pair<std::string, std::vector<std::string>>>& check_aliases()
{
    static const std::vector<std::pair<std::string, std::vector<std::string>>> aliases = {
        {"coassoc", {"associativity"}},
        {"novikov", {"left-symmetry", "novikov-right-commutativity"}},
        {"lie", {"anticommutativity", "jacobi"}},
        {"right-alternative", {"right-alternativity-linearized"}},
        {"moufang", {"moufang-linearized"}},
        {"jordan", {"jordan-linearized"}},
        {"super", {"supercommutativity"}},
    };
    return aliases;
}

std::vector<std::string> known_checks()
{
    std::vector<std::string> names{"cocomm", "coderivation", "shift-bound"};
    for (const auto& [alias, ids] : check_aliases())
        names.push_back(alias);
    for (const auto& e : builtin_identities())
        names.push_back(e.name);
    return names;
}

[[noreturn]] void unknown_check(const std::string& name)
{
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& k : known_checks())
        scored.emplace_back(edit_distance(name, k), k);
    std::sort(scored.begin(), scored.end());
    std::string msg = "unknown check '" + name + "'";
    std::string close;
    for (const auto& [d, k] : scored)
        if (d <= 3 || k.find(name) != std::string::npos)
            close += (close.empty() ? "" : ", ") + k;
    msg += close.empty() ? "; known checks: " : "; did you mean: ";
    if (close.empty())
        for (const auto& k : known_checks())
            close += (close.empty() ? "" : ", ") + k;
    throw CLI::ValidationError(msg + close);
}

void run_check(Report& r, const CoalgebraSpec& spec, const std::string& name, long n, bool kp)
{
    if (name == "cocomm") {
        r.checks.push_back(cocommutativity_check(spec, {n}, spec.graded()));
        return;
    }
    if (name == "coderivation") {
        r.checks.push_back(coderivation_check(spec, {n}));
        return;
    }
    if (name == "shift-bound") {
        r.checks.push_back(validate_shift_bound(spec, {n}));
        return;
    }
    for (const auto& [alias, ids] : check_aliases())
        if (alias == name) {
            for (const auto& id : ids)
                r.checks.push_back(check_identity(spec, lookup_identity(id).poly, {n}, kp, id));
            return;
        }
    for (const auto& e : builtin_identities())
        if (e.name == name) {
            r.checks.push_back(check_identity(spec, e.poly, {n}, kp, e.name));
            return;
        }
    unknown_check(name);
}

std::string join_labels(const CoalgebraSpec& spec, const std::vector<Label>& ls)
{
    std::string out;
    for (const Label& l : ls)
        out += (out.empty() ? "" : " ") + spec.format(l);
    return out;
}

std::string functional_name(const CoalgebraSpec& spec, const std::string& text)
{
    return format_functional(spec, parse_vector(spec, text));
}

} // namespace

int main(int argc, char** argv)
{
    const auto start = std::chrono::steady_clock::now();
    Report report;
    for (int i = 1; i < argc; ++i)
        report.argv.emplace_back(argv[i]);

    CLI::App app{"Exact verification engine for nonassociative coalgebras"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false, deterministic = false;
    app.add_flag("--json", json, "emit the machine-readable report");
    app.add_flag("--deterministic", deterministic, "omit wall-clock timing so reports are byte-identical");

    // check
    auto* check = app.add_subcommand("check", "run coidentity and structure checks over an index range");
    SpecSource check_src;
    check_src.add_to(check);
    std::vector<std::string> checks, identities;
    std::string signature;
    long max_index = 30;
    bool koszul = false;
    check->add_option("--checks", checks, "comma-separated check names")->delimiter(',');
    check->add_option("--identity", identities, "identity in the identity language (repeatable)");
    check->add_option("--signature", signature, "slot parities for --identity, e.g. eo* ");
    check->add_option("--max-index", max_index, "largest basis index checked")->check(CLI::NonNegativeNumber);
    check->add_flag("--koszul-pairing", koszul, "evaluate with the Koszul-signed pairing");

    // closure
    auto* closure = app.add_subcommand("closure", "subcoalgebra closure probes");
    SpecSource closure_src;
    closure_src.add_to(closure);
    std::string closure_mode = "probe";
    std::vector<std::string> generators;
    Budget budget;
    long horizon = 30;
    int trials = 5;
    std::uint64_t seed = 1;
    closure->add_option("mode", closure_mode, "probe (default) or simplicity")
        ->check(CLI::IsMember({"probe", "simplicity"}));
    closure->add_option("--generators", generators, "comma-separated vectors, e.g. f:1,~f:2")->delimiter(',');
    closure->add_option("--max-steps", budget.max_steps, "step budget")->check(CLI::PositiveNumber);
    closure->add_option("--max-dim", budget.max_dim, "dimension budget")->check(CLI::PositiveNumber);
    closure->add_option("--horizon", horizon, "simplicity horizon N")->check(CLI::NonNegativeNumber);
    closure->add_option("--trials", trials, "random start vectors for simplicity")->check(CLI::NonNegativeNumber);
    closure->add_option("--seed", seed, "seed for random start vectors");

    // construct
    auto* construct = app.add_subcommand("construct", "build a new spec and write it as a spec file");
    SpecSource construct_src;
    construct_src.add_to(construct);
    std::string construction, algebra, output, compare;
    long dual_horizon = 60, compare_index = 30;
    construct->add_option("construction", construction, "gelfand-dorfman, antisymmetrize, kantor or graded-dual")
        ->required()
        ->check(CLI::IsMember({"gelfand-dorfman", "antisymmetrize", "kantor", "graded-dual"}));
    construct->add_option("--algebra", algebra, "graded algebra for graded-dual (see list-examples)");
    construct->add_option("--horizon", dual_horizon, "largest degree kept by graded-dual")
        ->check(CLI::NonNegativeNumber);
    construct->add_option("-o,--output", output, "spec file to write");
    construct->add_option("--compare", compare, "builtin example to compare the result with");
    construct->add_option("--max-index", compare_index, "range of the comparison")->check(CLI::NonNegativeNumber);

    // dual
    auto* dual = app.add_subcommand("dual", "exact computations in the dual algebra");
    SpecSource dual_src;
    dual_src.add_to(dual);
    std::string dual_mode;
    std::vector<std::string> left, right, of;
    std::string dual_identity, dual_signature;
    long bound = 10;
    GrassmannOptions gopts;
    dual->add_option("mode", dual_mode, "product, derivation, identity or grassmann")
        ->required()
        ->check(CLI::IsMember({"product", "derivation", "identity", "grassmann"}));
    dual->add_option("--left", left, "left factors (comma-separated vectors)")->delimiter(',');
    dual->add_option("--right", right, "right factors (comma-separated vectors)")->delimiter(',');
    dual->add_option("--of", of, "arguments of d* (comma-separated vectors)")->delimiter(',');
    dual->add_option("--identity", dual_identity, "identity for brute-force evaluation");
    dual->add_option("--signature", dual_signature, "slot parities for --identity");
    dual->add_option("--bound", bound, "largest index of coordinate functionals")->check(CLI::NonNegativeNumber);
    dual->add_option("--generators", gopts.generators, "Grassmann generators")->check(CLI::Range(3, 16));
    dual->add_option("--samples", gopts.samples, "Grassmann samples")->check(CLI::PositiveNumber);
    dual->add_option("--seed", gopts.seed, "Grassmann sampling seed");
    dual->add_option("--max-index", gopts.max_index, "largest index in sampled elements")
        ->check(CLI::NonNegativeNumber);
    dual->add_option("--terms", gopts.terms_per_element, "terms per sampled element")->check(CLI::PositiveNumber);

    // list-examples, export
    auto* list = app.add_subcommand("list-examples", "list builtin examples and graded algebras");
    auto* exporter = app.add_subcommand("export", "write a spec as a spec file");
    SpecSource export_src;
    export_src.add_to(exporter);
    std::string export_out;
    exporter->add_option("-o,--output", export_out, "spec file to write (stdout when omitted)");

    auto finish = [&](int code) {
        report.exit_code = code;
        report.seconds =
            deterministic ? 0.0 : std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (json ? cli::render_json(report) : cli::render_text(report));
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return cli::Usage;
    }

    try {
        if (check->parsed()) {
            report.command = "check";
            CoalgebraSpec spec = check_src.load(report);
            if (checks.empty() && identities.empty())
                throw CLI::ValidationError("give --checks and/or --identity");
            for (const auto& c : checks)
                if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
                    unknown_check(c);
            for (const auto& c : checks)
                run_check(report, spec, c, max_index, koszul);
            for (const auto& text : identities) {
                NAPoly p = parse_identity(text);
                if (!signature.empty())
                    p = p.with_signature(signature);
                report.checks.push_back(check_identity(spec, p, {max_index}, koszul));
            }
            return finish(report.verdict_code());
        }
        if (closure->parsed()) {
            report.command = "closure " + closure_mode;
            CoalgebraSpec spec = closure_src.load(report);
            if (closure_mode == "simplicity") {
                report.seeds.push_back(seed);
                report.checks.push_back(simplicity_probe(spec, horizon, trials, seed));
                return finish(report.verdict_code());
            }
            if (generators.empty())
                throw CLI::ValidationError("closure probe needs --generators");
            std::vector<FormalVector> gens;
            std::string names;
            for (const auto& g : generators) {
                gens.push_back(parse_vector(spec, g));
                names += (names.empty() ? "" : ", ") + spec.format(gens.back());
            }
            auto probe = local_finiteness_probe(spec, gens, budget);
            cli::TraceEntry t{names, probe.trace, {}};
            for (const auto& added : probe.trace.added)
                t.added_labels.push_back(join_labels(spec, added));
            report.traces.push_back(std::move(t));
            return finish(report.verdict_code());
        }
        if (construct->parsed()) {
            report.command = "construct " + construction;
            std::optional<CoalgebraSpec> built;
            if (construction == "graded-dual") {
                if (algebra.empty())
                    throw CLI::ValidationError("graded-dual needs --algebra");
                built = graded_dual(builtin_algebra(algebra), dual_horizon);
            } else {
                CoalgebraSpec base = construct_src.load(report);
                if (construction == "gelfand-dorfman")
                    built = gelfand_dorfman(base);
                else if (construction == "antisymmetrize")
                    built = antisymmetrize(base);
                else
                    built = kantor(base);
            }
            std::string text = spec_to_json(*built);
            report.has_spec = true;
            report.spec = {built->name(), "construction", fnv1a64_hex(text)};
            if (!output.empty()) {
                std::ofstream out(output, std::ios::binary);
                if (!out)
                    throw ParseError("cannot write output file", output);
                out << text;
                report.outputs.push_back({"written", output});
            }
            std::vector<Label> sample = built->labels_up_to(std::min<long>(3, built->max_declared_index().value_or(3)));
            for (std::size_t i = 0; i < sample.size() && i < 8; ++i)
                report.outputs.push_back({"Δ(" + built->format(sample[i]) + ")", built->format(delta(*built, sample[i]))});
            if (!compare.empty())
                report.checks.push_back(equivalent_on(*built, builtin(compare), {compare_index}));
            return finish(report.verdict_code());
        }
        if (dual->parsed()) {
            report.command = "dual " + dual_mode;
            CoalgebraSpec spec = dual_src.load(report);
            CheckReport sb = validate_shift_bound(spec, {std::max<long>(bound, 2 * gopts.max_index)});
            if (!sb.passed) {
                report.checks.push_back(std::move(sb));
                return finish(report.verdict_code());
            }
            DualAlgebra alg(spec);
            if (dual_mode == "product") {
                if (left.empty() || right.empty())
                    throw CLI::ValidationError("dual product needs --left and --right");
                for (const auto& a : left)
                    for (const auto& b : right)
                        report.outputs.push_back(
                            {"(" + functional_name(spec, a) + ")·(" + functional_name(spec, b) + ")",
                             format_functional(spec, alg.product(parse_vector(spec, a), parse_vector(spec, b)))});
            } else if (dual_mode == "derivation") {
                if (of.empty())
                    throw CLI::ValidationError("dual derivation needs --of");
                for (const auto& a : of)
                    report.outputs.push_back({"d*(" + functional_name(spec, a) + ")",
                                              format_functional(spec, alg.derivation(parse_vector(spec, a)))});
            } else if (dual_mode == "identity") {
                if (dual_identity.empty())
                    throw CLI::ValidationError("dual identity needs --identity");
                NAPoly p = parse_identity(dual_identity);
                if (!dual_signature.empty())
                    p = p.with_signature(dual_signature);
                report.checks.push_back(bruteforce_identity(spec, p, bound));
            } else {
                report.seeds.push_back(gopts.seed);
                report.checks.push_back(grassmann_envelope_check(spec, gopts));
            }
            return finish(report.verdict_code());
        }
        if (list->parsed()) {
            report.command = "list-examples";
            for (const auto& b : builtin_catalog())
                report.catalog.push_back({"example", b.name, b.description, b.lineage});
            for (const auto& b : builtin_algebra_catalog())
                report.catalog.push_back({"algebra", b.name, b.description, b.lineage});
            return finish(cli::Pass);
        }
        if (exporter->parsed()) {
            report.command = "export";
            CoalgebraSpec spec = export_src.load(report);
            std::string text = spec_to_json(spec);
            if (export_out.empty()) {
                std::cout << text;
                return cli::Pass;
            }
            std::ofstream out(export_out, std::ios::binary);
            if (!out)
                throw ParseError("cannot write output file", export_out);
            out << text;
            report.outputs.push_back({"written", export_out});
            return finish(cli::Pass);
        }
    } catch (const CLI::ValidationError& e) {
        report.errors.push_back(e.what());
        return finish(cli::Usage);
    } catch (const Error& e) {
        report.errors.push_back(e.what());
        return finish(cli::Usage);
    }
    return cli::Usage;
}

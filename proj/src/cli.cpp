#include "monoci/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "monoci/decomposition.hpp"
#include "monoci/dsl.hpp"
#include "monoci/errors.hpp"
#include "monoci/serialize.hpp"
#include "monoci/verify.hpp"

namespace monoci {

namespace {

struct Common {
    std::string field = "rational";
    unsigned horizon = 3;
    bool json = false;
    unsigned jobs = 1;
};

// Input is a file if one exists at that path, otherwise program text.
std::string read_input(const std::string& input) {
    std::error_code ec;
    if (input.find(';') == std::string::npos && std::filesystem::is_regular_file(input, ec)) {
        std::ifstream in(input);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return input;
}

InvariantOptions invariant_options(const Common& c) {
    InvariantOptions o;
    o.betti.jobs = c.jobs;
    return o;
}

void add_common(CLI::App* cmd, Common& c, bool with_field) {
    if (with_field) cmd->add_option("--field", c.field, "rational or fp:<q>");
    cmd->add_option("--horizon", c.horizon, "largest power t examined for min depth and dg")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", c.json, "structured output");
    cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of monomial ideals: height, cd, ara bounds, analytic spread, fgrade, dg, depth."};
    app.name("monoci");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");

    Common c;
    std::string input;
    bool partial = false;

    auto* report_cmd = app.add_subcommand("report", "all invariants of one ideal");
    report_cmd->add_option("input", input, "program text or a file containing it")->required();
    add_common(report_cmd, c, true);
    report_cmd->add_flag("--partial", partial, "omit power-based fields instead of failing on resource limits");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an ideal expression");
    eval_cmd->add_option("input", input, "program text or a file containing it")->required();
    add_common(eval_cmd, c, true);

    auto* decompose_cmd = app.add_subcommand("decompose", "irreducible components and minimal primes");
    decompose_cmd->add_option("input", input, "program text or a file containing it")->required();
    add_common(decompose_cmd, c, true);

    auto* verify_cmd = app.add_subcommand("verify-paper", "replay the worked examples and formulas");
    add_common(verify_cmd, c, false);

    RandomIdealSpec spec;
    std::size_t count = 100;
    bool any_exponents = false;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "run every applicable checker on random ideals");
    add_common(fuzz_cmd, c, false);
    fuzz_cmd->add_option("--seed", spec.seed, "random seed");
    fuzz_cmd->add_option("--count", count, "number of ideals");
    fuzz_cmd->add_option("--n", spec.n, "number of variables")->check(CLI::Range(1, 16));
    fuzz_cmd->add_flag("--general", any_exponents, "arbitrary exponents instead of squarefree ideals");
    fuzz_cmd->add_option("--max-exponent", spec.max_exponent, "largest exponent for --general")->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--max-generators", spec.max_generators, "generator (or facet) count bound")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "monoci: " << e.what() << "\n";
        return exit_usage;
    }

    auto* active = app.get_subcommands().front();
    if (active->count("--horizon") == 0) {
        if (const char* env = std::getenv("MONOCI_HORIZON")) {
            char* end = nullptr;
            unsigned long h = std::strtoul(env, &end, 10);
            if (*env == '\0' || *end != '\0' || h == 0 || h > 1000) {
                err << "monoci: MONOCI_HORIZON must be a positive integer, got '" << env << "'\n";
                return exit_usage;
            }
            c.horizon = static_cast<unsigned>(h);
        }
    }

    try {
        FieldSpec field = FieldSpec::parse(c.field);
        const int indent = 2;
        if (active == report_cmd || active == eval_cmd || active == decompose_cmd) {
            auto program = parse(read_input(input), field);
            auto ideal = evaluate(program);
            if (active == eval_cmd) {
                if (c.json) out << ideal_to_json(ideal, indent);
                else out << print(program) << "\n" << ideal.to_string() << "\n";
                return exit_ok;
            }
            if (active == decompose_cmd) {
                auto comps = irreducible_decomposition(ideal);
                auto primes = minimal_primes(ideal);
                if (c.json) {
                    out << decomposition_to_json(ideal, comps, primes, indent);
                } else {
                    out << "ideal       " << ideal.to_string() << "\n";
                    for (const auto& comp : comps) out << "component   " << comp.ideal().to_string() << "\n";
                    for (const auto& p : primes) out << "min prime   " << p.to_string() << "\n";
                }
                return exit_ok;
            }
            ReportOptions ro;
            ro.horizon = c.horizon;
            ro.allow_partial = partial;
            ro.invariants = invariant_options(c);
            auto r = report(ideal, ro);
            out << (c.json ? report_to_json(r, indent) : report_to_text(r));
            return exit_ok;
        }

        VerifyOptions vo;
        vo.horizon = c.horizon;
        vo.invariants = invariant_options(c);
        vo.jobs = c.jobs;
        std::vector<CheckResult> results;
        if (active == verify_cmd) {
            results = run_paper_examples(vo);
        } else {
            spec.squarefree = !any_exponents;
            vo.invariants.betti.jobs = 1;
            results = fuzz(spec, count, vo);
        }
        out << (c.json ? checks_to_json(results, indent) : checks_to_text(results));
        return has_failures(results) ? exit_check_failed : exit_ok;
    } catch (const ParseError& e) {
        err << "monoci: " << e.what() << "\n";
        return exit_usage;
    } catch (const ContextMismatch& e) {
        err << "monoci: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "monoci: " << e.what() << "\n";
        return exit_usage;
    } catch (const ResourceError& e) {
        err << "monoci: resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const InternalError& e) {
        err << "monoci: internal consistency check failed: " << e.what() << "\n";
        return exit_check_failed;
    }
}

}  // namespace monoci

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "report.hpp"

namespace {

using namespace factorlab;

enum Exit { ok = 0, parse_error = 2, budget_exceeded = 3, suite_violation = 4, invariant_breach = 5 };

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read spec file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Factorization invariants of monoids: reports, verification suites, growth tables."};
    app.set_version_flag("--version", std::string("factorlab ") + cli::version);
    app.require_subcommand(1);

    cli::RunOptions run;
    std::string spec_path, out_path, suite;
    std::vector<std::int64_t> radii;
    bool timing = false;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::int64_t inv_elements = 0, ver_elements = 0;
    std::size_t budget_factorizations = run.budget.max_factorizations;
    std::size_t pairs = SuiteOptions{}.pairs;

    auto common = [&](CLI::App* c) {
        c->add_option("--seed", seed, "seed recorded in the report and used for sampling")->capture_default_str();
        c->add_option("--jobs", jobs, "worker threads; output does not depend on it")->check(CLI::Range(1u, 256u))->capture_default_str();
        c->add_option("--out", out_path, "output file (default: stdout)");
        c->add_option("--budget-factorizations", budget_factorizations, "max factorizations enumerated per element")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        c->add_flag("--timing", timing, "add wall time to the report (makes output run-dependent)");
    };

    auto* inv = app.add_subcommand("invariants", "compute the invariant report of one monoid");
    inv->add_option("--spec", spec_path, "spec file")->required();
    inv->add_option("--budget-elements", inv_elements, "element bound or box side")
        ->check(CLI::PositiveNumber)
        ->default_val(run.budget.element_bound);
    inv->add_option("--radius", radii, "tame degree radius")->check(CLI::NonNegativeNumber)->expected(1);
    common(inv);

    auto* ver = app.add_subcommand("verify", "run a verification suite over built-in and seeded random instances");
    ver->add_option("--suite", suite, "suite name or 'all'")->required();
    ver->add_option("--budget-elements", ver_elements, "element bound or box side")
        ->check(CLI::PositiveNumber)
        ->default_val(SuiteOptions{}.element_bound);
    ver->add_option("--pairs", pairs, "pairs sampled per instance for the sumset laws, 0 = all")->capture_default_str();
    common(ver);

    auto* gro = app.add_subcommand("growth", "CSV of bounded invariants against the scan radius");
    gro->add_option("--spec", spec_path, "spec file")->required();
    gro->add_option("--radius", radii, "radii, repeatable or comma separated")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber)
        ->default_str("2,4,6,8");
    common(gro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_error;
    }

    run.seed = seed;
    run.jobs = jobs;
    run.budget.max_factorizations = budget_factorizations;
    Timer timer;
    try {
        if (*inv) {
            run.budget.element_bound = inv_elements;
            if (!radii.empty()) run.budget.radius = radii.back();
            auto spec = make(read_file(spec_path));
            auto r = cli::invariants_report(spec, run);
            r.report["reproducibility"] = cli::reproducibility(seed, timing ? std::optional(timer.ms()) : std::nullopt);
            write_output(out_path, r.report.dump(2) + "\n");
            if (!r.violations.empty()) {
                for (const auto& v : r.violations) std::cerr << "theorem consistency violation: " << v << "\n";
                return invariant_breach;
            }
            return ok;
        }
        if (*ver) {
            SuiteOptions o;
            o.seed = seed;
            o.jobs = jobs;
            o.element_bound = ver_elements;
            o.pairs = pairs;
            o.max_factorizations = budget_factorizations;
            std::vector<Check> checks;
            auto r = cli::verify_report(suite, o, checks);
            r.report["reproducibility"] = cli::reproducibility(seed, timing ? std::optional(timer.ms()) : std::nullopt);
            write_output(out_path, cli::render_verify(r.report, checks));
            std::cerr << suite << ": " << checks.size() << " checks, " << r.violations << " violations\n";
            return r.violations == 0 ? ok : suite_violation;
        }
        if (radii.empty()) radii = {2, 4, 6, 8};
        auto spec = make(read_file(spec_path));
        write_output(out_path, cli::growth_csv(spec, radii, run));
        if (timing) std::cerr << "wall time " << timer.ms() << " ms\n";
        return ok;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return parse_error;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return budget_exceeded;
    } catch (const std::exception& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return invariant_breach;
    }
}

// blockcrit: coefficient tables, constants, simulations and comparisons.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "blockcrit/cli/commands.hpp"

namespace {

using namespace blockcrit;
using namespace blockcrit::cli;

template <class T>
std::optional<T> optional_of(const CLI::Option* opt, const T& value) {
    return opt->count() ? std::optional<T>(value) : std::nullopt;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum block size in random graphs near the phase transition"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "blockcrit 0.1.0");

    std::string tables_flag;
    std::string format = "csv";

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "build exact coefficient tables and print them");
    EnumerateOptions eopt;
    std::string output;
    enumerate->add_option("--rmax", eopt.rmax, "largest excess")->capture_default_str()->check(CLI::PositiveNumber);
    auto* output_opt = enumerate->add_option("--output,-o", output, "tables file to write");
    auto* etables_opt = enumerate->add_option("--tables", tables_flag, "cache directory or file");

    // constants
    auto* constants = app.add_subcommand("constants", "evaluate c1 or c2(lambda)");
    ConstantsOptions copt;
    std::string composition = "mixed";
    constants->add_option("mode", copt.mode, "c1 or c2")->required()->check(CLI::IsMember({"c1", "c2"}));
    constants->add_option("--lambda", copt.lambdas, "lambda value (repeatable, comma separated)")
        ->delimiter(',')
        ->allow_extra_args(false);
    constants->add_option("--rmax", copt.cfg.rmax, "excess truncation for c2")->capture_default_str();
    constants->add_option("--quad-tol", copt.cfg.quadTol, "relative quadrature tolerance")->capture_default_str();
    constants->add_option("--series-tol", copt.cfg.seriesTol, "A(y, lambda) series cutoff")->capture_default_str();
    constants->add_option("--umax", copt.cfg.uMax, "upper integration limit")->capture_default_str();
    constants->add_option("--composition", composition, "mixed or verbatim")
        ->capture_default_str()
        ->check(CLI::IsMember({"mixed", "verbatim"}));
    constants->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    auto* ctables_opt = constants->add_option("--tables", tables_flag, "cache directory or file");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the mean max block size");
    SimulateOptions sopt;
    std::uint64_t m_value = 0;
    double lambda_value = 0.0;
    simulate->add_option("--n", sopt.n, "vertices")->required()->check(CLI::PositiveNumber);
    auto* m_opt = simulate->add_option("--m", m_value, "edges");
    auto* lambda_opt = simulate->add_option("--lambda", lambda_value, "M = round(n/2 (1 + lambda n^{-1/3}))");
    m_opt->excludes(lambda_opt);
    simulate->add_option("--trials", sopt.trials, "trials")->capture_default_str()->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sopt.seed, "master seed")->capture_default_str();
    simulate->add_option("--parallelism,-j", sopt.parallelism, "threads (0 = all cores)")->capture_default_str();
    simulate->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // compare
    auto* compare = app.add_subcommand("compare", "simulation against the asymptotic formula");
    CompareOptions popt;
    std::uint64_t gap_value = 0;
    std::vector<double> band;
    compare->add_option("scenario", popt.scenario, "subcritical or critical")
        ->required()
        ->check(CLI::IsMember({"subcritical", "critical"}));
    compare->add_option("--n", popt.n, "vertices")->capture_default_str();
    auto* gap_opt = compare->add_option("--gap", gap_value, "subcritical: n - 2M (default ceil(n^0.8))");
    compare->add_option("--lambda", popt.lambda, "critical: lambda")->capture_default_str();
    compare->add_option("--trials", popt.trials, "trials")->capture_default_str()->check(CLI::PositiveNumber);
    compare->add_option("--seed", popt.seed, "master seed")->capture_default_str();
    compare->add_option("--parallelism,-j", popt.parallelism, "threads (0 = all cores)")->capture_default_str();
    auto* band_opt = compare->add_option("--band", band, "accepted ratio range LOW,HIGH")->delimiter(',')->expected(2);
    compare->add_option("--rmax", popt.rmax, "excess truncation for c2")->capture_default_str();
    compare->add_option("--composition", composition, "mixed or verbatim")
        ->check(CLI::IsMember({"mixed", "verbatim"}));
    compare->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    auto* ptables_opt = compare->add_option("--tables", tables_flag, "cache directory or file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (*enumerate) {
            eopt.output = optional_of(output_opt, output);
            eopt.tables = optional_of(etables_opt, tables_flag);
            return cmd_enumerate(eopt, std::cout);
        }
        if (*constants) {
            copt.cfg.composition = analysis::parse_composition(composition);
            copt.format = parse_format(format);
            copt.tables = optional_of(ctables_opt, tables_flag);
            return cmd_constants(copt, std::cout);
        }
        if (*simulate) {
            sopt.M = optional_of(m_opt, m_value);
            sopt.lambda = optional_of(lambda_opt, lambda_value);
            sopt.format = parse_format(format);
            return cmd_simulate(sopt, std::cout);
        }
        if (*compare) {
            popt.gap = optional_of(gap_opt, gap_value);
            if (band_opt->count()) {
                popt.band_low = band.at(0);
                popt.band_high = band.at(1);
            }
            popt.composition = analysis::parse_composition(composition);
            popt.format = parse_format(format);
            popt.tables = optional_of(ptables_opt, tables_flag);
            return cmd_compare(popt, std::cout);
        }
    } catch (const std::exception& ex) {
        return report_error(ex, std::cerr);
    }
    return kOk;
}

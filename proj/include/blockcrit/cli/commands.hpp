#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "blockcrit/analysis/constants.hpp"
#include "blockcrit/cli/tables_cache.hpp"
#include "blockcrit/enumeration/tables.hpp"
#include "blockcrit/error.hpp"
#include "blockcrit/exactalg/big_rational.hpp"
#include "blockcrit/graphsim/monte_carlo.hpp"

namespace blockcrit::cli {

enum ExitCode : int {
    kOk = 0,
    kOutsideBand = 1,
    kValidation = 2,
    kNumerical = 3,
    kIo = 4,
};

enum class Format { csv, json };

inline Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw ValidationError("unknown format '" + s + "' (expected csv or json)");
}

using graphsim::format_real;

// ---------------------------------------------------------------- enumerate

struct EnumerateOptions {
    int rmax = 6;
    /// File to write; falls back to the tables location, else no file.
    std::optional<std::string> output;
    std::optional<std::string> tables;
};

inline int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out) {
    if (opt.rmax < 1) throw ValidationError("--rmax must be >= 1");
    const auto tables = enumeration::tables_build(opt.rmax);
    using exactalg::to_string;

    out << "rmax = " << tables.rmax << "\n";
    for (std::size_t n = 2; n < tables.t.size(); ++n) out << "t_" << n << " = " << to_string(tables.t[n]) << "\n";
    for (const auto& [key, v] : tables.g)
        out << "g(" << key.first << "," << key.second << ") = " << to_string(v) << "\n";
    for (int r = 1; r <= tables.rmax; ++r) out << "b_" << r << " = " << to_string(tables.b_at(r)) << "\n";
    for (const auto& [key, v] : tables.c)
        out << "c_{" << key.first << "," << key.second << "} = " << to_string(v) << "\n";

    std::optional<fs::path> file;
    if (opt.output && !opt.output->empty())
        file = fs::path(*opt.output);
    else if (auto loc = tables_location(opt.tables))
        file = tables_cache_file(*loc, opt.rmax);
    if (file) {
        std::error_code ec;
        if (file->has_parent_path()) fs::create_directories(file->parent_path(), ec);
        if (ec) throw IoError("cannot create " + file->parent_path().string() + ": " + ec.message());
        enumeration::tables_save(tables, *file);
        out << "wrote " << file->string() << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- constants

struct ConstantsOptions {
    std::string mode = "c1";
    std::vector<double> lambdas;
    analysis::AnalysisConfig cfg;
    Format format = Format::csv;
    std::optional<std::string> tables;
};

inline nlohmann::json c2_json(const analysis::C2Breakdown& b) {
    auto real = [](double x) { return std::stod(format_real(x)); };
    auto per_r = nlohmann::json::array();
    for (double v : b.perRContribution) per_r.push_back(real(v));
    return {{"lambda", real(b.lambda)},
            {"alpha", real(b.alpha)},
            {"c2", real(b.value)},
            {"tailMass", real(b.tailMass)},
            {"uStar", real(b.uStar)},
            {"tailSensitivity", real(b.tailSensitivity)},
            {"quadError", real(b.quadError)},
            {"rmax", b.rmax},
            {"composition", analysis::to_string(b.composition)},
            {"perRContribution", per_r}};
}

inline int cmd_constants(const ConstantsOptions& opt, std::ostream& out) {
    opt.cfg.validate();
    if (opt.mode == "c1") {
        const auto c1 = analysis::compute_c1_detailed(opt.cfg);
        if (opt.format == Format::csv)
            out << "constant,value,error\nc1," << format_real(c1.value) << "," << format_real(c1.error) << "\n";
        else
            out << nlohmann::json{{"constant", "c1"},
                                  {"value", std::stod(format_real(c1.value))},
                                  {"error", std::stod(format_real(c1.error))}}
                       .dump(2)
                << "\n";
        return kOk;
    }
    if (opt.mode != "c2") throw ValidationError("unknown constant '" + opt.mode + "' (expected c1 or c2)");

    const std::vector<double> grid = opt.lambdas.empty() ? std::vector<double>{0.0} : opt.lambdas;
    const auto tables = obtain_tables(opt.cfg.rmax, tables_location(opt.tables));
    std::vector<analysis::C2Breakdown> rows;
    for (double lambda : grid) rows.push_back(analysis::compute_c2(lambda, tables, opt.cfg));

    if (opt.format == Format::csv) {
        out << "lambda,alpha,c2,tailMass,uStar,tailSensitivity,rmax,composition\n";
        for (const auto& b : rows)
            out << format_real(b.lambda) << "," << format_real(b.alpha) << "," << format_real(b.value) << ","
                << format_real(b.tailMass) << "," << format_real(b.uStar) << "," << format_real(b.tailSensitivity)
                << "," << b.rmax << "," << analysis::to_string(b.composition) << "\n";
    } else {
        auto arr = nlohmann::json::array();
        for (const auto& b : rows) arr.push_back(c2_json(b));
        out << arr.dump(2) << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateOptions {
    std::uint32_t n = 0;
    std::optional<std::uint64_t> M;
    std::optional<double> lambda;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned parallelism = 0;
    Format format = Format::csv;
};

inline std::uint64_t resolve_edges(std::uint32_t n, const std::optional<std::uint64_t>& M,
                                   const std::optional<double>& lambda) {
    if (n < 1) throw ValidationError("--n must be >= 1");
    if (M && lambda) throw ValidationError("--m and --lambda are mutually exclusive");
    if (!M && !lambda) throw ValidationError("one of --m or --lambda is required");
    if (M) {
        if (*M > graphsim::pair_count(n))
            throw ValidationError("--m " + std::to_string(*M) + " exceeds C(n,2) = " +
                                  std::to_string(graphsim::pair_count(n)));
        return *M;
    }
    return graphsim::edges_for_lambda(n, *lambda);
}

inline void write_sim_result(const graphsim::SimResult& r, Format format, std::ostream& out) {
    if (format == Format::csv)
        out << graphsim::csv_header() << "\n" << graphsim::csv_row(r) << "\n";
    else
        out << graphsim::to_json(r).dump(2) << "\n";
}

inline int cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
    const std::uint64_t M = resolve_edges(opt.n, opt.M, opt.lambda);
    if (opt.trials < 1) throw ValidationError("--trials must be >= 1");
    write_sim_result(graphsim::run_monte_carlo(opt.n, M, opt.trials, opt.seed, opt.parallelism), opt.format, out);
    return kOk;
}

// ---------------------------------------------------------------- compare

struct CompareOptions {
    std::string scenario = "subcritical";
    std::uint32_t n = 1'000'000;
    /// subcritical: n - 2M; default ceil(n^0.8).
    std::optional<std::uint64_t> gap;
    /// critical: lambda; default 0.
    double lambda = 0.0;
    std::uint64_t trials = 200;
    std::uint64_t seed = 1;
    unsigned parallelism = 0;
    std::optional<double> band_low, band_high;
    /// Truncation used for c2 here. Larger than the analysis default: the
    /// defect at rmax = 6 biases c2(0) upward by about 4%.
    int rmax = 16;
    analysis::Composition composition = analysis::Composition::mixed;
    Format format = Format::csv;
    std::optional<std::string> tables;
};

struct CompareReport {
    std::string scenario;
    std::uint32_t n = 0;
    std::uint64_t M = 0;
    double lambda = 0.0;
    double theory = 0.0;
    double constant = 0.0;
    graphsim::SimResult sim;
    double ratio = 0.0;
    double ratioLow = 0.0, ratioHigh = 0.0;
    double bandLow = 0.0, bandHigh = 0.0;
    bool withinBand = false;
};

inline std::uint64_t default_gap(std::uint32_t n) {
    return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(n), 0.8)));
}

/// Theory, simulation and their ratio. Throws ValidationError (with
/// "outside asymptotic regime") for inputs the asymptotic formulas do not
/// describe.
inline CompareReport run_compare(const CompareOptions& opt) {
    const std::string regime = "outside asymptotic regime: ";
    if (opt.n < 1000)
        throw ValidationError(regime + "n = " + std::to_string(opt.n) + " is below 1000");
    if (opt.trials < 1) throw ValidationError("--trials must be >= 1");

    CompareReport rep;
    rep.scenario = opt.scenario;
    rep.n = opt.n;
    const double nd = opt.n;
    if (opt.scenario == "subcritical") {
        const std::uint64_t gap = opt.gap.value_or(default_gap(opt.n));
        // meaningful for n^{2/3} << n - 2M << n
        if (gap >= opt.n || static_cast<double>(gap) <= std::cbrt(nd) * std::cbrt(nd) ||
            static_cast<double>(gap) > nd / 2.0)
            throw ValidationError(regime + "need n^{2/3} < n - 2M <= n/2, got n - 2M = " + std::to_string(gap));
        if ((opt.n - gap) % 2 != 0)
            throw ValidationError("n - 2M = " + std::to_string(gap) + " must have the parity of n");
        rep.M = (opt.n - gap) / 2;
        rep.constant = analysis::compute_c1();
        rep.theory = rep.constant * nd / static_cast<double>(gap);
        rep.bandLow = opt.band_low.value_or(0.85);
        rep.bandHigh = opt.band_high.value_or(1.15);
    } else if (opt.scenario == "critical") {
        if (!std::isfinite(opt.lambda)) throw ValidationError("--lambda must be finite");
        rep.M = graphsim::edges_for_lambda(opt.n, opt.lambda);
        analysis::AnalysisConfig cfg;
        cfg.rmax = opt.rmax;
        cfg.composition = opt.composition;
        const auto tables = obtain_tables(cfg.rmax, tables_location(opt.tables));
        // theory at the realized M
        const double lambda = graphsim::lambda_of(opt.n, rep.M);
        rep.constant = analysis::compute_c2(lambda, tables, cfg).value;
        rep.theory = rep.constant * std::cbrt(nd);
        rep.bandLow = opt.band_low.value_or(0.8);
        rep.bandHigh = opt.band_high.value_or(1.2);
    } else {
        throw ValidationError("unknown scenario '" + opt.scenario + "' (expected subcritical or critical)");
    }
    if (!(rep.bandLow < rep.bandHigh)) throw ValidationError("band must satisfy low < high");

    rep.sim = graphsim::run_monte_carlo(opt.n, rep.M, opt.trials, opt.seed, opt.parallelism);
    rep.lambda = rep.sim.lambda;
    rep.ratio = rep.sim.meanMaxBlock / rep.theory;
    rep.ratioLow = (rep.sim.meanMaxBlock - 1.96 * rep.sim.stdErr) / rep.theory;
    rep.ratioHigh = (rep.sim.meanMaxBlock + 1.96 * rep.sim.stdErr) / rep.theory;
    rep.withinBand = rep.ratio >= rep.bandLow && rep.ratio <= rep.bandHigh;
    return rep;
}

inline void write_compare(const CompareReport& r, Format format, std::ostream& out) {
    if (format == Format::csv) {
        out << "scenario,n,M,lambda,trials,seed,constant,theory,empirical,stderr,ratio,ratio_ci_low,ratio_ci_high,"
               "band_low,band_high,within_band\n";
        out << r.scenario << "," << r.n << "," << r.M << "," << format_real(r.lambda) << "," << r.sim.trials << ","
            << r.sim.seed << "," << format_real(r.constant) << "," << format_real(r.theory) << ","
            << format_real(r.sim.meanMaxBlock) << "," << format_real(r.sim.stdErr) << "," << format_real(r.ratio)
            << "," << format_real(r.ratioLow) << "," << format_real(r.ratioHigh) << "," << format_real(r.bandLow)
            << "," << format_real(r.bandHigh) << "," << (r.withinBand ? "true" : "false") << "\n";
        return;
    }
    auto real = [](double x) { return std::stod(format_real(x)); };
    out << nlohmann::json{{"scenario", r.scenario},
                          {"constant", real(r.constant)},
                          {"theory", real(r.theory)},
                          {"ratio", real(r.ratio)},
                          {"ratioCI", {real(r.ratioLow), real(r.ratioHigh)}},
                          {"band", {real(r.bandLow), real(r.bandHigh)}},
                          {"withinBand", r.withinBand},
                          {"simulation", graphsim::to_json(r.sim)}}
               .dump(2)
        << "\n";
}

inline int cmd_compare(const CompareOptions& opt, std::ostream& out) {
    const auto rep = run_compare(opt);
    write_compare(rep, opt.format, out);
    return rep.withinBand ? kOk : kOutsideBand;
}

/// Maps a library exception to the documented exit code and prints it.
inline int report_error(const std::exception& ex, std::ostream& err) {
    if (dynamic_cast<const ValidationError*>(&ex)) {
        const std::string what = ex.what();
        err << (what.find("outside asymptotic regime") != std::string::npos ? "warning: " : "error: ") << what
            << "\n";
        return kValidation;
    }
    if (const auto* num = dynamic_cast<const NumericalError*>(&ex)) {
        err << "error: " << num->what() << " (best estimate " << format_real(num->best_estimate()) << ")\n";
        return kNumerical;
    }
    if (dynamic_cast<const IoError*>(&ex)) {
        err << "error: " << ex.what() << "\n";
        return kIo;
    }
    err << "error: " << ex.what() << "\n";
    return kValidation;
}

} // namespace blockcrit::cli

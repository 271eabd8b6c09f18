#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "blockcrit/error.hpp"
#include "blockcrit/graphsim/blocks.hpp"
#include "blockcrit/graphsim/graph.hpp"
#include "blockcrit/graphsim/rng.hpp"

namespace blockcrit::graphsim {

/// lambda = (2M/n - 1) n^{1/3}.
inline double lambda_of(std::uint32_t n, std::uint64_t M) {
    if (n == 0) throw ValidationError("lambda_of: n must be positive");
    const double nd = n;
    return (2.0 * static_cast<double>(M) / nd - 1.0) * std::cbrt(nd);
}

/// M = (n/2)(1 + lambda n^{-1/3}), rounded to nearest with ties to even.
inline std::uint64_t edges_for_lambda(std::uint32_t n, double lambda) {
    if (n == 0) throw ValidationError("edges_for_lambda: n must be positive");
    if (!std::isfinite(lambda)) throw ValidationError("edges_for_lambda: lambda must be finite");
    const double nd = n;
    const double m = std::nearbyint(0.5 * nd * (1.0 + lambda / std::cbrt(nd)));
    if (m < 0.0 || m > static_cast<double>(pair_count(n)))
        throw ValidationError("lambda = " + std::to_string(lambda) + " gives M outside [0, C(n,2)] at n = " +
                              std::to_string(n));
    return static_cast<std::uint64_t>(m);
}

struct SimResult {
    std::uint32_t n = 0;
    std::uint64_t M = 0;
    double lambda = 0.0;
    std::uint64_t trials = 0;
    double meanMaxBlock = 0.0;
    double stdErr = 0.0;
    std::uint64_t seed = 0;
    std::string rng = SplitMix64::name;
    std::map<std::uint32_t, std::uint64_t> histogram;

    friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Max block size of each trial, indexed by trial.
inline std::vector<std::uint32_t> simulate_trials(std::uint32_t n, std::uint64_t M, std::uint64_t trials,
                                                  std::uint64_t seed, unsigned parallelism) {
    if (trials < 1) throw ValidationError("run_monte_carlo: trials must be >= 1");
    if (M > pair_count(n))
        throw ValidationError("run_monte_carlo: M = " + std::to_string(M) + " exceeds C(n,2) = " +
                              std::to_string(pair_count(n)));
    if (parallelism == 0) parallelism = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(parallelism, trials));

    std::vector<std::uint32_t> out(trials);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::uint64_t t = w; t < trials; t += workers)
                out[t] = max_block_size(sample_gnm(n, M, trial_seed(seed, t)));
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

/// Monte Carlo estimate of E(max block size) for G(n, M). Trial t uses the
/// seed trial_seed(seed, t), and the aggregation is exact integer
/// arithmetic in trial order, so the result does not depend on parallelism.
inline SimResult run_monte_carlo(std::uint32_t n, std::uint64_t M, std::uint64_t trials, std::uint64_t seed,
                                 unsigned parallelism = 0) {
    const auto sizes = simulate_trials(n, M, trials, seed, parallelism);
    SimResult r;
    r.n = n;
    r.M = M;
    r.lambda = lambda_of(n, M);
    r.trials = trials;
    r.seed = seed;
    unsigned __int128 sum = 0, sumsq = 0;
    for (auto s : sizes) {
        sum += s;
        sumsq += static_cast<unsigned __int128>(s) * s;
        ++r.histogram[s];
    }
    const double t = static_cast<double>(trials);
    r.meanMaxBlock = static_cast<double>(sum) / t;
    if (trials > 1) {
        // sample variance from exact integer moments: (T*sumsq - sum^2) / (T (T-1))
        const unsigned __int128 num = static_cast<unsigned __int128>(trials) * sumsq - sum * sum;
        const double var = static_cast<double>(num) / (t * (t - 1.0));
        r.stdErr = std::sqrt(var / t);
    }
    return r;
}

/// %.9g
inline std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

inline std::string csv_header() { return "n,M,lambda,trials,mean,stderr,seed"; }

inline std::string csv_row(const SimResult& r) {
    return std::to_string(r.n) + "," + std::to_string(r.M) + "," + format_real(r.lambda) + "," +
           std::to_string(r.trials) + "," + format_real(r.meanMaxBlock) + "," + format_real(r.stdErr) + "," +
           std::to_string(r.seed);
}

/// Reals are rounded to 9 significant digits before serialization.
inline nlohmann::json to_json(const SimResult& r) {
    auto real = [](double x) { return std::stod(format_real(x)); };
    auto hist = nlohmann::json::array();
    for (auto [size, count] : r.histogram) hist.push_back({{"size", size}, {"count", count}});
    return {{"n", r.n},
            {"M", r.M},
            {"lambda", real(r.lambda)},
            {"trials", r.trials},
            {"meanMaxBlock", real(r.meanMaxBlock)},
            {"stdErr", real(r.stdErr)},
            {"seed", r.seed},
            {"rng", r.rng},
            {"histogram", hist}};
}

} // namespace blockcrit::graphsim

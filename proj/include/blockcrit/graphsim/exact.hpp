#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockcrit/error.hpp"
#include "blockcrit/exactalg/big_rational.hpp"
#include "blockcrit/graphsim/blocks.hpp"
#include "blockcrit/graphsim/graph.hpp"

namespace blockcrit::graphsim {

inline constexpr std::uint64_t kExactGraphLimit = 10'000'000;

/// C(a, b), or `cap + 1` once it exceeds `cap`.
inline std::uint64_t binomial_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        acc = acc * (a - b + i) / i;
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

/// Calls f(graph) for every graph on n labelled vertices with M edges.
template <class F>
void for_each_gnm(std::uint32_t n, std::uint64_t M, F&& f) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    if (M > slots.size())
        throw ValidationError("M = " + std::to_string(M) + " exceeds C(n,2) = " + std::to_string(slots.size()));
    std::vector<std::size_t> pick(M);
    for (std::size_t i = 0; i < M; ++i) pick[i] = i;
    std::vector<Edge> edges(M);
    for (;;) {
        for (std::size_t i = 0; i < M; ++i) edges[i] = slots[pick[i]];
        f(Graph::from_trusted(n, edges));
        // next combination in lexicographic order
        std::size_t i = M;
        while (i > 0 && pick[i - 1] == slots.size() - M + i - 1) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < M; ++j) pick[j] = pick[j - 1] + 1;
    }
}

/// E(max block size) over all C(C(n,2), M) graphs, exactly.
inline exactalg::BigRational exact_expectation(std::uint32_t n, std::uint64_t M) {
    const std::uint64_t slots = pair_count(n);
    if (M > slots)
        throw ValidationError("exact_expectation: M = " + std::to_string(M) + " exceeds C(n,2) = " +
                              std::to_string(slots));
    const std::uint64_t graphs = binomial_capped(slots, M, kExactGraphLimit);
    if (graphs > kExactGraphLimit)
        throw ValidationError("exact_expectation: more than " + std::to_string(kExactGraphLimit) +
                              " graphs to enumerate at n = " + std::to_string(n) + ", M = " + std::to_string(M));
    std::uint64_t total = 0;
    for_each_gnm(n, M, [&](const Graph& g) { total += max_block_size(g); });
    return exactalg::BigRational(exactalg::BigInt(total), exactalg::BigInt(graphs));
}

} // namespace blockcrit::graphsim

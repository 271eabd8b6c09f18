#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "blockcrit/error.hpp"
#include "blockcrit/graphsim/rng.hpp"

namespace blockcrit::graphsim {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Number of unordered vertex pairs, C(n, 2).
constexpr std::uint64_t pair_count(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Simple undirected graph with CSR adjacency. Each adjacency entry also
/// records the id of its edge (its index in edges()).
class Graph {
public:
    Graph() = default;

    /// Validates: endpoints < n, no self-loops, no duplicate edges.
    Graph(std::uint32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(edges_.size() * 2);
        for (auto& [u, v] : edges_) {
            if (u >= n || v >= n)
                throw ValidationError("Graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                      ") out of range for n = " + std::to_string(n));
            if (u == v) throw ValidationError("Graph: self-loop at " + std::to_string(u));
            if (!seen.insert(key(u, v)).second)
                throw ValidationError("Graph: duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        }
        build_adjacency();
    }

    /// Skips validation; the caller guarantees a simple graph.
    static Graph from_trusted(std::uint32_t n, std::vector<Edge> edges) {
        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.build_adjacency();
        return g;
    }

    std::uint32_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::span<const std::uint32_t> incident_edges(Vertex v) const {
        return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
    }
    const std::vector<std::size_t>& offsets() const noexcept { return offsets_; }
    const std::vector<Vertex>& targets() const noexcept { return targets_; }
    const std::vector<std::uint32_t>& edge_ids() const noexcept { return edge_ids_; }

    std::uint64_t key(Vertex u, Vertex v) const noexcept {
        if (u > v) std::swap(u, v);
        return static_cast<std::uint64_t>(u) * n_ + v;
    }

private:
    void build_adjacency() {
        offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (auto [u, v] : edges_) {
            ++offsets_[u + 1];
            ++offsets_[v + 1];
        }
        for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
        targets_.resize(2 * edges_.size());
        edge_ids_.resize(2 * edges_.size());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (std::uint32_t id = 0; id < edges_.size(); ++id) {
            auto [u, v] = edges_[id];
            targets_[fill[u]] = v;
            edge_ids_[fill[u]++] = id;
            targets_[fill[v]] = u;
            edge_ids_[fill[v]++] = id;
        }
    }

    std::uint32_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
    std::vector<std::uint32_t> edge_ids_;
};

namespace detail {

inline Edge edge_of_key(std::uint64_t key, std::uint32_t n) {
    return {static_cast<Vertex>(key / n), static_cast<Vertex>(key % n)};
}

// Distinct uniform unordered pairs, in acceptance order, until `count`.
inline std::vector<std::uint64_t> draw_distinct_pairs(std::uint32_t n, std::uint64_t count, SplitMix64& rng) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count * 2);
    std::vector<std::uint64_t> keys;
    keys.reserve(count);
    while (keys.size() < count) {
        auto u = static_cast<std::uint64_t>(uniform_below(rng, n));
        auto v = static_cast<std::uint64_t>(uniform_below(rng, n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        const std::uint64_t k = u * n + v;
        if (seen.insert(k).second) keys.push_back(k);
    }
    return keys;
}

} // namespace detail

/// Uniform random graph with n vertices and exactly M edges.
///
/// Distinct pairs are drawn by rejection into a hash set. Above half of all
/// pairs the complement is drawn instead, so the rejection rate stays below
/// one half either way.
inline Graph sample_gnm(std::uint32_t n, std::uint64_t M, std::uint64_t seed) {
    const std::uint64_t total = pair_count(n);
    if (M > total)
        throw ValidationError("sample_gnm: M = " + std::to_string(M) + " exceeds C(n,2) = " + std::to_string(total));
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(M);
    if (2 * M <= total) {
        for (auto k : detail::draw_distinct_pairs(n, M, rng)) edges.push_back(detail::edge_of_key(k, n));
    } else {
        auto missing = detail::draw_distinct_pairs(n, total - M, rng);
        std::unordered_set<std::uint64_t> absent(missing.begin(), missing.end());
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!absent.contains(static_cast<std::uint64_t>(u) * n + v)) edges.emplace_back(u, v);
    }
    return Graph::from_trusted(n, std::move(edges));
}

} // namespace blockcrit::graphsim

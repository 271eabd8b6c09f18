#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "blockcrit/graphsim/graph.hpp"

namespace blockcrit::graphsim {

/// Calls `on_block(std::span<const std::uint32_t> edge_ids)` once per block
/// (biconnected component with at least one edge).
///
/// Iterative lowpoint DFS with an explicit vertex stack and edge stack, so
/// recursion depth is never an issue.
template <class OnBlock>
void for_each_block(const Graph& g, OnBlock&& on_block) {
    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    const std::uint32_t n = g.n();
    const auto& offsets = g.offsets();
    const auto& targets = g.targets();
    const auto& ids = g.edge_ids();

    std::vector<std::uint32_t> disc(n, 0), low(n, 0), parent_edge(n, none);
    std::vector<std::size_t> next(offsets.begin(), offsets.end() - 1);
    std::vector<Vertex> stack;
    std::vector<std::uint32_t> edge_stack;
    std::uint32_t timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != 0 || g.degree(root) == 0) continue;
        disc[root] = low[root] = ++timer;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            if (next[v] < offsets[v + 1]) {
                const std::size_t idx = next[v]++;
                const Vertex w = targets[idx];
                const std::uint32_t e = ids[idx];
                if (e == parent_edge[v]) continue;
                if (disc[w] == 0) {
                    edge_stack.push_back(e);
                    parent_edge[w] = e;
                    disc[w] = low[w] = ++timer;
                    stack.push_back(w);
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            stack.pop_back();
            if (stack.empty()) break;
            const Vertex p = stack.back();
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                // p separates v's subtree: everything above parent_edge[v] is one block
                auto it = std::find(edge_stack.rbegin(), edge_stack.rend(), parent_edge[v]);
                const std::size_t start = static_cast<std::size_t>(edge_stack.rend() - it) - 1;
                on_block(std::span<const std::uint32_t>(edge_stack.data() + start, edge_stack.size() - start));
                edge_stack.resize(start);
            }
        }
    }
}

struct Block {
    std::vector<Vertex> vertices;   // sorted
    std::vector<std::uint32_t> edges; // edge ids, sorted
};

/// All blocks with at least one edge. Isolated vertices are not listed.
inline std::vector<Block> block_decomposition(const Graph& g) {
    std::vector<Block> out;
    for_each_block(g, [&](std::span<const std::uint32_t> edge_ids) {
        Block b;
        b.edges.assign(edge_ids.begin(), edge_ids.end());
        std::sort(b.edges.begin(), b.edges.end());
        for (auto id : b.edges) {
            b.vertices.push_back(g.edges()[id].first);
            b.vertices.push_back(g.edges()[id].second);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        out.push_back(std::move(b));
    });
    return out;
}

/// Vertex count of the largest block: 0 for the empty graph, 1 when there
/// are no edges, otherwise at least 2.
inline std::uint32_t max_block_size(const Graph& g) {
    if (g.n() == 0) return 0;
    if (g.m() == 0) return 1;
    std::vector<std::uint32_t> stamp(g.n(), 0);
    std::uint32_t block = 0, best = 0;
    for_each_block(g, [&](std::span<const std::uint32_t> edge_ids) {
        ++block;
        std::uint32_t size = 0;
        for (auto id : edge_ids) {
            auto [u, v] = g.edges()[id];
            if (stamp[u] != block) stamp[u] = block, ++size;
            if (stamp[v] != block) stamp[v] = block, ++size;
        }
        best = std::max(best, size);
    });
    return best;
}

} // namespace blockcrit::graphsim

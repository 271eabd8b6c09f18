// Block decomposition of a small hand-built graph.

#include <cstdio>

#include "blockcrit/graphsim/blocks.hpp"

int main() {
    using namespace blockcrit::graphsim;
    // a 5-cycle 0..4, a pendant 5 on vertex 0, and a triangle 5-6-7
    Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 5}});
    for (const auto& b : block_decomposition(g)) {
        std::printf("block:");
        for (auto v : b.vertices) std::printf(" %u", v);
        std::printf("  (%zu edges)\n", b.edges.size());
    }
    std::printf("max block size = %u\n", max_block_size(g));
}

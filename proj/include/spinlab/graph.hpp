#pragma once

#include <utility>
#include <vector>

#include "spinlab/errors.hpp"

namespace spinlab {

// Simple undirected graph.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // each pair (u,v) with u < v, sorted

    Graph() = default;
    explicit Graph(int vertices) : n(vertices) {}

    void add_edge(int u, int v);
    int degree(int v) const;
    // Common degree if regular, nullopt-style -1 otherwise.
    int regularity() const;
};

Graph complete_graph(int n);

}  // namespace spinlab

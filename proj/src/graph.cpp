#include "spinlab/graph.hpp"

#include <algorithm>

namespace spinlab {

void Graph::add_edge(int u, int v) {
    if (u == v) throw PreconditionViolated("graph loops are not allowed");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw PreconditionViolated("graph vertex out of range");
    if (u > v) std::swap(u, v);
    std::pair<int, int> e{u, v};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return;
    edges.insert(it, e);
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

int Graph::regularity() const {
    if (n == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n; ++v)
        if (degree(v) != d) return -1;
    return d;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace spinlab

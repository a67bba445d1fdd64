#pragma once

#include <random>

#include "spinlab/spin_core.hpp"

// Shared deterministic generators for the property-test suites.

inline spinlab::Hypergraph random_hypergraph(std::mt19937& rng, int n, int k, int max_edges,
                                             bool allow_empty = true) {
    spinlab::Hypergraph h(n);
    int target = std::uniform_int_distribution<int>(allow_empty ? 0 : 1, max_edges)(rng);
    for (int tries = 0; tries < 8 * target && (int)h.edges.size() < target; ++tries) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        h.add_edge(std::vector<int>(pool.begin(), pool.begin() + k));
    }
    return h;
}

inline spinlab::SymmetricFunction random_rational_fn(std::mt19937& rng, int k, int max_num = 4,
                                                     int max_den = 4) {
    std::vector<spinlab::Rat> w(k + 1);
    std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
    for (auto& x : w) x = spinlab::Rat(num(rng), den(rng));
    return spinlab::SymmetricFunction(k, std::move(w));
}

inline spinlab::SymmetricFunction random_boolean_fn(std::mt19937& rng, int k) {
    std::vector<spinlab::Rat> w(k + 1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (auto& x : w) x = bit(rng);
    return spinlab::SymmetricFunction(k, std::move(w));
}

inline spinlab::SymmetricFunction random_self_dual_fn(std::mt19937& rng, int k) {
    auto f = random_rational_fn(rng, k);
    for (int l = 0; l <= k / 2; ++l) f.w[k - l] = f.w[l];
    return f;
}

// The two-edge hypergraph sharing k-1 vertices: terminals 0 and 1,
// shared vertices 2..k.
inline spinlab::Hypergraph pair_hypergraph(int k) {
    spinlab::Hypergraph h(k + 1);
    std::vector<int> e0{0}, e1{1};
    for (int z = 2; z <= k; ++z) {
        e0.push_back(z);
        e1.push_back(z);
    }
    h.add_edge(e0);
    h.add_edge(e1);
    return h;
}

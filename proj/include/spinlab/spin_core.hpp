#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spinlab/errors.hpp"
#include "spinlab/rational.hpp"

namespace spinlab {

inline constexpr int kDefaultCap = 26;

// Symmetric constraint function of arity k: weight w[l] is applied to a
// hyperedge carrying exactly l spin-1 vertices.
struct SymmetricFunction {
    int k = 0;
    std::vector<Rat> w;  // size k+1, all entries >= 0

    SymmetricFunction() = default;
    SymmetricFunction(int arity, std::vector<Rat> weights);

    bool is_boolean() const;
    bool is_self_dual() const;  // palindromic weight vector
    bool is_constant() const;   // all weights equal
};

// Catalog constructors used throughout the tests and the pipeline.
SymmetricFunction fn_nae(int k);        // (0,1,...,1,0)
SymmetricFunction fn_weak_is(int k);    // (1,...,1,0)
SymmetricFunction fn_strong_is(int k);  // (1,1,0,...,0)
SymmetricFunction fn_zero(int k);
SymmetricFunction fn_one(int k);
SymmetricFunction fn_all_zero(int k);
SymmetricFunction fn_all_one(int k);
SymmetricFunction fn_eq(int k);
SymmetricFunction fn_even(int k);
SymmetricFunction fn_odd(int k);

struct Hypergraph {
    int n = 0;
    // Each edge sorted ascending; the list is kept sorted and duplicate-free.
    std::vector<std::vector<int>> edges;

    Hypergraph() = default;
    explicit Hypergraph(int vertices) : n(vertices) {}

    void add_edge(std::vector<int> e);         // validates, keeps set semantics
    bool has_edge(const std::vector<int>& e) const;
    void remove_edge(const std::vector<int>& e);
    int arity() const;                         // 0 when edgeless
    int degree(int v) const;
    int max_degree() const;
    bool operator==(const Hypergraph&) const = default;
};

// Complete k-uniform hypergraph on n vertices, edges in lexicographic order.
Hypergraph complete_hypergraph(int n, int k);

// A configuration is a bitmask over vertex labels: bit v = spin of v.
using Config = std::uint64_t;

// Conditioning structure: pins and equality blocks, pairwise disjoint,
// every equality block has >= 2 vertices.
struct AdmissibleCollection {
    std::vector<int> pin0;
    std::vector<int> pin1;
    std::vector<std::vector<int>> eq_blocks;

    bool empty() const { return pin0.empty() && pin1.empty() && eq_blocks.empty(); }
    void validate(int n) const;  // throws PreconditionViolated
};

struct MarginalTable {
    std::vector<int> subject;  // sorted ascending; tau bit j = spin of subject[j]
    std::vector<Rat> prob;     // size 1 << subject.size(), sums to 1

    const Rat& at(unsigned tau) const { return prob.at(tau); }
};

struct EnumOptions {
    int cap = kDefaultCap;
    int shards = 1;  // configuration space split into this many ordered ranges
};

Rat weight(const SymmetricFunction& f, const Hypergraph& H, Config sigma);

Rat partition_function(const SymmetricFunction& f, const Hypergraph& H,
                       const EnumOptions& opts = {});

// Unnormalized conditioned masses, one entry per assignment of S.
// The workhorse behind partition_function / marginal / is_admissible.
std::vector<Rat> conditional_sums(const SymmetricFunction& f, const Hypergraph& H,
                                  const AdmissibleCollection& cond,
                                  const std::vector<int>& S, const EnumOptions& opts = {});

MarginalTable marginal(const SymmetricFunction& f, const Hypergraph& H,
                       const std::vector<int>& S, const AdmissibleCollection& cond = {},
                       const EnumOptions& opts = {});

bool is_admissible(const SymmetricFunction& f, const Hypergraph& H,
                   const AdmissibleCollection& cond, const EnumOptions& opts = {});

// Polynomial-time Z for the seven easy patterns (no enumeration, no cap).
Rat easy_partition(const SymmetricFunction& f, const Hypergraph& H);

}  // namespace spinlab

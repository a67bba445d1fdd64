#pragma once

#include <array>
#include <optional>
#include <vector>

#include "spinlab/classify.hpp"
#include "spinlab/gadgets.hpp"
#include "spinlab/graph.hpp"
#include "spinlab/uniqueness.hpp"

namespace spinlab {

enum class HardnessRoute { Antiferro, DecisionCSP };
const char* route_name(HardnessRoute r);

// Conditional pair table mu[s1][s2] flattened as {mu00, mu01, mu10, mu11}.
using PairTable = std::array<Rat, 4>;

// A single-edge conditioning whose conditional pair distribution at (x, y)
// is strictly antiferromagnetic, i.e. min(mu00,mu11)^2 < mu01*mu10 and
// max(mu00,mu11)^2 <= mu01*mu10 with mu00 + mu11 > 0.
struct HardnessWitness {
    HardnessRoute route = HardnessRoute::Antiferro;
    Hypergraph base;                 // one k-edge
    AdmissibleCollection conditioning;
    int x = -1, y = -1;
    PairTable mu{};                  // normalized conditional table
};

bool antiferro_table(const PairTable& mu);

// Scan single-edge conditionings (pins-to-0 count ascending, then pins-to-1,
// then the shared size of the x/y equality blocks, then the extra equality
// blocks in lexicographic order) and return the first antiferromagnetic hit.
// Functions with zero all-equal weight that are self-dual go to the
// decision-CSP route instead.
HardnessWitness witness_search(const SymmetricFunction& f, const ClassificationReport& report);

struct SymmetrisedWitness {
    Hypergraph h;  // two cross-identified copies of the input
    int x = -1, y = -1;
    PairTable mu{};  // normalized; mu01 == mu10 by construction
};

SymmetrisedWitness symmetrise_witness(const SymmetricFunction& f, const Hypergraph& H, int x,
                                      int y, const EnumOptions& opts = {});

// One fresh copy of H2 per edge of G, terminals identified with the edge's
// endpoints (smaller endpoint takes x).  Labels 0..G.n-1 are G's vertices.
Hypergraph edge_replace(const Graph& g, const Hypergraph& h2, int x, int y,
                        bool require_regular = false);

struct EdgeReplaceReport {
    bool ok = false;
    Rat lhs, rhs;          // hypergraph side / binary 2-spin side
    Rat beta, gamma;       // mu00/mu01 and mu11/mu01
    Rat edge_factor;       // mu01 * Z_{H2}, raised to |E|
    PairTable mu{};
};

// Exact identity: replacing every edge of G by H2 multiplies the binary
// 2-spin partition function of G (at lambda = 1) by (mu01 * Z_{H2})^|E|.
EdgeReplaceReport verify_edge_replacement(const SymmetricFunction& f, const Graph& g, const Hypergraph& h2,
                         int x, int y, const EnumOptions& opts = {});

// Constraint-satisfaction instance over one symmetric function: every
// constraint lists k variable slots (repeats allowed).
struct CspInstance {
    int vars = 0;
    std::vector<std::vector<int>> constraints;

    std::vector<int> use_counts() const;  // per-variable slot count
    void validate(int k) const;
};

// Sum over all assignments of the product of constraint values.
Rat csp_partition(const SymmetricFunction& f, const CspInstance& inst);

struct CspSplitReport {
    Hypergraph h;
    Rat z_csp, z_h, zeta;
    Int exponent = 0;  // sum over variables of (uses - 1)
    bool ok = false;   // z_h == zeta^exponent * z_csp, checked exactly
    int max_degree = 0;
};

// Split each variable into one vertex per use, put one hyperedge per
// constraint, and chain copies of the exact equality forcer between the
// consecutive copies of each variable.
CspSplitReport csp_split(const SymmetricFunction& f, const CspInstance& inst,
                         const ExactEquality& eq, const EnumOptions& opts = {});

struct DeltaCertificate {
    Rat beta0, gamma0;  // after the spin swap making mu00 <= mu11
    StripReport strip;
    Rat eps;  // accuracy the conditional gadgets must achieve: 1/Delta
    std::optional<Verdict> spot;  // direct check at (beta0, gamma0, 1, Delta)
};

DeltaCertificate min_delta_certificate(const HardnessWitness& w, const Rat& eps_budget = 1);

}  // namespace spinlab

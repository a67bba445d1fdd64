#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "spinlab/spin_core.hpp"

namespace spinlab {

enum class GadgetKind { PinTo0, PinTo1, TEquality, Conditional };
const char* gadget_kind_name(GadgetKind k);

// A hypergraph with marked terminals together with its certified accuracy.
//  - PinTo0/PinTo1: one terminal v; guarantee mu(sigma_v = wrong spin) <= eps.
//  - TEquality: t terminals; guarantee mu(all terminals = s) >= (1-eps)/2.
//  - Conditional: terminals = subject set; guarantee the unconditioned marginal
//    of the assembly is entrywise within eps of the stored target table.
struct Gadget {
    Hypergraph h;
    std::vector<int> terminals;  // sorted ascending
    GadgetKind kind = GadgetKind::PinTo0;
    int t = 0;  // number of terminals for TEquality

    Rat eps_target = 0;
    Rat eps_measured = 0;
    // True when the gadget was too large to enumerate and the accuracy comes
    // from the closed product form the construction guarantees.
    bool analytic_only = false;

    Int replication = 1;  // number of glued copies
    Rat p = 0, q = 0;     // good / bad masses driving the replication count

    std::vector<Rat> target;  // Conditional only: exact table over terminals
};

// Glue a copy of `part` onto `base`: part_terminals[i] is identified with
// base_targets[i]; every other vertex of `part` receives the next unused
// label of `base` (in increasing original-label order).  Returns the label
// map applied to `part`.
std::vector<int> attach_copy(Hypergraph& base, const Hypergraph& part,
                             const std::vector<int>& part_terminals,
                             const std::vector<int>& base_targets);

// Replicate H at v until the minority spin mass at v drops to eps.
Gadget power_pinning(const SymmetricFunction& f, const Hypergraph& H, int v, int s,
                     const Rat& eps, const EnumOptions& opts = {});

// Two mirrored copies of H make the pair marginal at (x, y) symmetric; the
// result is replicated at both terminals until the unequal mass drops to eps.
Gadget symmetrise_equality(const SymmetricFunction& f, const Hypergraph& H, int x, int y,
                           const Rat& eps, const EnumOptions& opts = {});

// Accuracy the 2-terminal equality gadget must reach so that one copy per
// terminal pair yields an eps-accurate t-terminal equality gadget.
Rat required_delta(int t, const Rat& eps);

// One copy of g2 on each of the C(t,2) terminal pairs.
Gadget lift_equality(const SymmetricFunction& f, const Gadget& g2, int t, const Rat& eps,
                     const EnumOptions& opts = {});

// Supplier of pin / t-equality gadgets at any requested accuracy (the `t`
// argument is ignored for pins).
using GadgetLibrary = std::function<Gadget(GadgetKind kind, int t, const Rat& eps)>;

// Library backed by power_pinning / symmetrise_equality / lift_equality on a
// base hypergraph with designated pin terminal and equality terminal pair.
GadgetLibrary standard_library(const SymmetricFunction& f, const Hypergraph& base, int pin_v,
                               int eq_x, int eq_y, const EnumOptions& opts = {});

// Turn the conditioning `cond` on H into plain extra structure: pins and
// equality blocks are peeled off one at a time, each replaced by an attached
// gadget whose accuracy follows the schedule eps1 = eps/2, eps2 = eps1*M^2/4,
// eps3 = eps2/2^|S|.  The result's unconditioned marginal over S is certified
// entrywise against the exact conditional marginal.
Gadget realise_conditional(const SymmetricFunction& f, const Hypergraph& H,
                           const AdmissibleCollection& cond, const std::vector<int>& S,
                           const Rat& eps, const GadgetLibrary& lib,
                           const EnumOptions& opts = {});

// Hypergraph with Z > 0 on which every positive-weight configuration assigns
// x and y the same spin; the two equal-spin masses z0 = z1 are both positive.
struct ExactEquality {
    Hypergraph h;
    int x = -1, y = -1;
    Rat z = 0, z0 = 0, z1 = 0;
};

// Deterministic construction of an exact equality forcer for a self-dual
// Boolean function with empty-edge weight zero (and at least one other zero
// structure to exploit): start from the complete k-uniform hypergraph on
// 2k-1 vertices (which has Z = 0), peel edges lexicographically while Z
// stays 0, then splice fresh vertices into the first remaining edge until Z
// becomes positive and duplicate the last spliced vertex.
ExactEquality exact_equality_search(const SymmetricFunction& f, const EnumOptions& opts = {});

// Re-derive the defining marginals of g by exact enumeration; returns whether
// the target accuracy holds together with the measured slack.
std::pair<bool, Rat> verify_realisation(const SymmetricFunction& f, const Gadget& g,
                                        const EnumOptions& opts = {});

}  // namespace spinlab

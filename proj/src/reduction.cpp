#include "spinlab/reduction.hpp"

#include <algorithm>

namespace spinlab {

namespace {

// Nondecreasing lists of block sizes >= 2 with total <= rem, in lexicographic
// order starting from the empty list (which leaves all rem slots free).
void block_lists(int rem, int min_part, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int part = min_part; part <= rem; ++part) {
        cur.push_back(part);
        block_lists(rem - part, part, cur, out);
        cur.pop_back();
    }
}

// Conditional pair table on a single k-edge: a slots pinned to 0, b pinned
// to 1, the x-block and y-block of t1 slots each carrying s1 resp. s2, the
// extra equality blocks flipping jointly, and m free slots.
PairTable slot_table(const SymmetricFunction& f, int a, int b, int t1,
                     const std::vector<int>& blocks, int m) {
    (void)a;
    PairTable mu{};
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            Rat sum = 0;
            for (unsigned mask = 0; mask < (1u << blocks.size()); ++mask) {
                int block_ones = 0;
                for (std::size_t i = 0; i < blocks.size(); ++i)
                    if (mask >> i & 1) block_ones += blocks[i];
                for (int l = 0; l <= m; ++l)
                    sum += Rat(binomial(m, l)) * f.w[b + (s1 + s2) * t1 + l + block_ones];
            }
            mu[s1 * 2 + s2] = sum;
        }
    }
    return mu;
}

void normalize(PairTable& mu) {
    Rat tot = mu[0] + mu[1] + mu[2] + mu[3];
    for (Rat& v : mu) v /= tot;
}

}  // namespace

const char* route_name(HardnessRoute r) {
    return r == HardnessRoute::Antiferro ? "antiferro" : "decision-CSP";
}

bool antiferro_table(const PairTable& mu) {
    if (mu[0] + mu[3] <= 0) return false;
    const Rat off = mu[1] * mu[2];
    const Rat lo = std::min(mu[0], mu[3]), hi = std::max(mu[0], mu[3]);
    return lo * lo < off && hi * hi <= off;
}

HardnessWitness witness_search(const SymmetricFunction& f, const ClassificationReport& report) {
    if (!f.is_boolean())
        throw PreconditionViolated("witness search expects a Boolean function");
    if (report.easy) throw NotEasy();
    if (report.tag == CaseTag::CaseII_w0_zero) {
        HardnessWitness w;
        w.route = HardnessRoute::DecisionCSP;
        return w;
    }

    const int k = f.k;
    const bool can0 = report.support.pin0 == Support::Yes;
    const bool can1 = report.support.pin1 == Support::Yes;
    const bool caneq = report.support.equality == Support::Yes;

    for (int a = 0; a + 2 <= k; ++a) {
        if (a > 0 && !can0) break;
        for (int b = 0; a + b + 2 <= k; ++b) {
            if (b > 0 && !can1) break;
            for (int t1 = 1; a + b + 2 * t1 <= k; ++t1) {
                if (t1 > 1 && !caneq) break;
                const int rem = k - a - b - 2 * t1;
                std::vector<std::vector<int>> lists;
                if (caneq) {
                    std::vector<int> cur;
                    block_lists(rem, 2, cur, lists);
                } else {
                    lists.push_back({});
                }
                for (const auto& blocks : lists) {
                    int used = 0;
                    for (int t : blocks) used += t;
                    const int m = rem - used;
                    PairTable mu = slot_table(f, a, b, t1, blocks, m);
                    if (!antiferro_table(mu)) continue;

                    HardnessWitness w;
                    w.route = HardnessRoute::Antiferro;
                    w.base = Hypergraph(k);
                    std::vector<int> edge(k);
                    for (int i = 0; i < k; ++i) edge[i] = i;
                    w.base.add_edge(edge);
                    int next = 0;
                    for (int i = 0; i < a; ++i) w.conditioning.pin0.push_back(next++);
                    for (int i = 0; i < b; ++i) w.conditioning.pin1.push_back(next++);
                    std::vector<int> xb, yb;
                    for (int i = 0; i < t1; ++i) xb.push_back(next++);
                    for (int i = 0; i < t1; ++i) yb.push_back(next++);
                    w.x = xb.front();
                    w.y = yb.front();
                    if (t1 > 1) {
                        w.conditioning.eq_blocks.push_back(xb);
                        w.conditioning.eq_blocks.push_back(yb);
                    }
                    for (int t : blocks) {
                        std::vector<int> blk;
                        for (int i = 0; i < t; ++i) blk.push_back(next++);
                        w.conditioning.eq_blocks.push_back(blk);
                    }
                    normalize(mu);
                    w.mu = mu;

                    // Cross-check the closed-form table against enumeration.
                    MarginalTable chk = marginal(f, w.base, {w.x, w.y}, w.conditioning);
                    for (int s1 = 0; s1 < 2; ++s1)
                        for (int s2 = 0; s2 < 2; ++s2)
                            if (chk.at(unsigned(s1) | unsigned(s2) << 1) != mu[s1 * 2 + s2])
                                throw InternalInconsistency(
                                    "witness table disagrees with the enumerated marginal");
                    return w;
                }
            }
        }
    }
    throw NoWitnessInBudget("no single-edge conditioning is antiferromagnetic");
}

SymmetrisedWitness symmetrise_witness(const SymmetricFunction& f, const Hypergraph& H, int x,
                                      int y, const EnumOptions& opts) {
    MarginalTable mt = marginal(f, H, {x, y}, {}, opts);
    const bool xlow = x < y;
    auto at = [&](int s1, int s2) {
        return mt.at(xlow ? unsigned(s1) | unsigned(s2) << 1
                          : unsigned(s2) | unsigned(s1) << 1);
    };
    const Rat m01 = at(0, 1), m10 = at(1, 0);
    if (m01 == 0 || m10 == 0) throw ZeroOffDiagonal();

    SymmetrisedWitness s;
    s.h = H;
    attach_copy(s.h, H, {x, y}, {y, x});
    s.x = std::min(x, y);
    s.y = std::max(x, y);
    const Rat p00 = at(0, 0) * at(0, 0), poff = m01 * m10, p11 = at(1, 1) * at(1, 1);
    const Rat tot = p00 + 2 * poff + p11;
    s.mu = {p00 / tot, poff / tot, poff / tot, p11 / tot};

    MarginalTable chk = marginal(f, s.h, {s.x, s.y}, {}, opts);
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
            if (chk.at(unsigned(s1) | unsigned(s2) << 1) != s.mu[s1 * 2 + s2])
                throw InternalInconsistency("cross-glued pair table disagrees with enumeration");
    return s;
}

Hypergraph edge_replace(const Graph& g, const Hypergraph& h2, int x, int y,
                        bool require_regular) {
    if (require_regular && g.regularity() < 0)
        throw NotRegular("edge replacement asked for a regular base graph");
    Hypergraph out(g.n);
    for (auto [u, v] : g.edges) attach_copy(out, h2, {x, y}, {u, v});
    return out;
}

EdgeReplaceReport verify_edge_replacement(const SymmetricFunction& f, const Graph& g, const Hypergraph& h2,
                         int x, int y, const EnumOptions& opts) {
    MarginalTable mt = marginal(f, h2, {x, y}, {}, opts);
    const bool xlow = x < y;
    auto at = [&](int s1, int s2) {
        return mt.at(xlow ? unsigned(s1) | unsigned(s2) << 1
                          : unsigned(s2) | unsigned(s1) << 1);
    };
    EdgeReplaceReport r;
    r.mu = {at(0, 0), at(0, 1), at(1, 0), at(1, 1)};
    if (r.mu[1] == 0 || r.mu[2] == 0) throw ZeroOffDiagonal();
    if (r.mu[1] != r.mu[2])
        throw PreconditionViolated("pair table is oriented; symmetrise the gadget first");
    r.beta = r.mu[0] / r.mu[1];
    r.gamma = r.mu[3] / r.mu[1];
    const Rat zh2 = partition_function(f, h2, opts);
    r.edge_factor = r.mu[1] * zh2;

    Hypergraph replaced = edge_replace(g, h2, x, y);
    r.lhs = partition_function(f, replaced, opts);
    r.rhs = rat_pow(r.edge_factor, (unsigned long)g.edges.size()) *
            binary_partition(r.beta, r.gamma, 1, g, opts.cap);
    r.ok = r.lhs == r.rhs;
    return r;
}

std::vector<int> CspInstance::use_counts() const {
    std::vector<int> uses(vars, 0);
    for (const auto& c : constraints)
        for (int v : c) ++uses.at(v);
    return uses;
}

void CspInstance::validate(int k) const {
    if (vars < 0) throw PreconditionViolated("negative variable count");
    for (const auto& c : constraints) {
        if ((int)c.size() != k) throw ArityMismatch("constraint slot count differs from arity");
        for (int v : c)
            if (v < 0 || v >= vars) throw PreconditionViolated("constraint variable out of range");
    }
}

Rat csp_partition(const SymmetricFunction& f, const CspInstance& inst) {
    inst.validate(f.k);
    if (inst.vars > 30) throw CapExceeded(inst.vars, 30);
    Rat z = 0;
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t(1) << inst.vars); ++sigma) {
        Rat prod = 1;
        for (const auto& c : inst.constraints) {
            int ones = 0;
            for (int v : c) ones += int(sigma >> v & 1);
            prod *= f.w[ones];
            if (prod == 0) break;
        }
        z += prod;
    }
    return z;
}

CspSplitReport csp_split(const SymmetricFunction& f, const CspInstance& inst,
                         const ExactEquality& eq, const EnumOptions& opts) {
    inst.validate(f.k);
    if (!f.is_self_dual() || f.w[0] != 0)
        throw PreconditionViolated("variable splitting needs a self-dual function with w0 = 0");
    auto certify = conditional_sums(f, eq.h, {}, {eq.x, eq.y}, opts);
    if (certify[1] != 0 || certify[2] != 0 || certify[0] != certify[3] || certify[0] == 0 ||
        certify[0] != eq.z0)
        throw BadGadget("equality forcer failed recertification");

    const auto uses = inst.use_counts();
    std::vector<int> offset(inst.vars + 1, 0);
    for (int v = 0; v < inst.vars; ++v) offset[v + 1] = offset[v] + std::max(1, uses[v]);

    CspSplitReport r;
    r.h = Hypergraph(offset[inst.vars]);
    std::vector<int> seen(inst.vars, 0);
    for (const auto& c : inst.constraints) {
        std::vector<int> edge;
        for (int v : c) edge.push_back(offset[v] + seen[v]++);
        r.h.add_edge(edge);
    }
    r.zeta = eq.z0;
    for (int v = 0; v < inst.vars; ++v) {
        for (int j = 1; j < uses[v]; ++j) {
            attach_copy(r.h, eq.h, {eq.x, eq.y}, {offset[v] + j - 1, offset[v] + j});
            r.exponent += 1;
        }
    }
    r.max_degree = r.h.max_degree();
    r.z_csp = csp_partition(f, inst);
    r.z_h = partition_function(f, r.h, opts);
    r.ok = r.z_h == rat_pow(r.zeta, r.exponent.convert_to<unsigned long>()) * r.z_csp;
    return r;
}

DeltaCertificate min_delta_certificate(const HardnessWitness& w, const Rat& eps_budget) {
    if (w.route != HardnessRoute::Antiferro)
        throw PreconditionViolated("decision-CSP witnesses carry no antiferromagnetic system");
    PairTable mu = w.mu;
    if (mu[0] > mu[3]) {  // spin swap so the 0-side is the lighter one
        std::swap(mu[0], mu[3]);
        std::swap(mu[1], mu[2]);
    }
    const Rat off = mu[1] * mu[2];
    if (off == 0) throw ZeroOffDiagonal();

    DeltaCertificate c;
    c.beta0 = mu[0] * mu[0] / off;
    c.gamma0 = mu[3] * mu[3] / off;
    c.strip = strip_certificate(c.beta0);
    c.eps = Rat(1) / Rat(c.strip.delta);
    if (eps_budget < c.eps) c.eps = eps_budget;
    if (c.gamma0 > 0) {
        if (auto d = c.strip.delta_int()) {
            SpinSystemParams p;
            p.beta = c.beta0;
            p.gamma = c.gamma0;
            p.lambda = 1;
            p.delta = *d;
            c.spot = uniqueness_verdict(p);
        }
    }
    return c;
}

}  // namespace spinlab

#include "spinlab/gadgets.hpp"

#include <algorithm>
#include <functional>

namespace spinlab {

namespace {

// Smallest m >= 1 with ratio^m <= eps (ratio in (0,1)); the replication count
// is one more than that.
unsigned long replication_for(const Rat& ratio, const Rat& eps) {
    Rat acc = ratio;
    unsigned long m = 1;
    while (acc > eps) {
        acc *= ratio;
        ++m;
    }
    return m + 1;
}

Rat sum_of(const std::vector<Rat>& v) {
    Rat s = 0;
    for (const Rat& x : v) s += x;
    return s;
}

void check_accuracy_range(const Rat& eps) {
    if (eps <= 0 || eps >= 1) throw PreconditionViolated("accuracy must lie in (0,1)");
}

}  // namespace

const char* gadget_kind_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::PinTo0: return "pin0";
        case GadgetKind::PinTo1: return "pin1";
        case GadgetKind::TEquality: return "equality";
        case GadgetKind::Conditional: return "conditional";
    }
    return "?";
}

std::vector<int> attach_copy(Hypergraph& base, const Hypergraph& part,
                             const std::vector<int>& part_terminals,
                             const std::vector<int>& base_targets) {
    if (part_terminals.size() != base_targets.size())
        throw PreconditionViolated("terminal lists differ in length");
    std::vector<int> map(part.n, -1);
    for (std::size_t i = 0; i < part_terminals.size(); ++i) {
        int pt = part_terminals[i], bt = base_targets[i];
        if (pt < 0 || pt >= part.n) throw PreconditionViolated("part terminal out of range");
        if (bt < 0 || bt >= base.n) throw PreconditionViolated("target vertex out of range");
        if (map[pt] != -1) throw PreconditionViolated("repeated part terminal");
        map[pt] = bt;
    }
    int next = base.n;
    for (int v = 0; v < part.n; ++v)
        if (map[v] == -1) map[v] = next++;
    base.n = next;
    for (const auto& e : part.edges) {
        std::vector<int> ne;
        ne.reserve(e.size());
        for (int v : e) ne.push_back(map[v]);
        base.add_edge(ne);
    }
    return map;
}

Gadget power_pinning(const SymmetricFunction& f, const Hypergraph& H, int v, int s,
                     const Rat& eps, const EnumOptions& opts) {
    check_accuracy_range(eps);
    if (s != 0 && s != 1) throw PreconditionViolated("pin spin must be 0 or 1");
    MarginalTable mt = marginal(f, H, {v}, {}, opts);
    const Rat p = mt.at(unsigned(s)), q = mt.at(unsigned(1 - s));
    if (p <= q)
        throw NoMajority("mu(sigma_v = " + std::to_string(s) + ") = " + to_frac(p) +
                         " does not exceed " + to_frac(q));

    Gadget g;
    g.kind = s == 0 ? GadgetKind::PinTo0 : GadgetKind::PinTo1;
    g.terminals = {v};
    g.t = 1;
    g.eps_target = eps;
    g.p = p;
    g.q = q;
    g.h = H;

    unsigned long r = 1;
    if (q > 0) {
        r = replication_for(q / p, eps);
        for (unsigned long i = 1; i < r; ++i) attach_copy(g.h, H, {v}, {v});
    }
    g.replication = r;
    const Rat pr = rat_pow(p, r), qr = rat_pow(q, r);
    g.eps_measured = qr / (pr + qr);
    if (g.eps_measured > eps)
        throw InternalInconsistency("replication failed to reach the requested accuracy");

    if (g.h.n <= opts.cap) {
        MarginalTable check = marginal(f, g.h, {v}, {}, opts);
        if (check.at(unsigned(1 - s)) != g.eps_measured)
            throw InternalInconsistency("enumerated pin mass differs from the product form");
    } else {
        g.analytic_only = true;
    }
    return g;
}

Gadget symmetrise_equality(const SymmetricFunction& f, const Hypergraph& H, int x, int y,
                           const Rat& eps, const EnumOptions& opts) {
    check_accuracy_range(eps);
    if (x == y) throw PreconditionViolated("equality terminals must be distinct");
    MarginalTable mt = marginal(f, H, {x, y}, {}, opts);
    const bool x_low = x < y;
    auto at = [&](int sx, int sy) {
        unsigned idx = x_low ? unsigned(sx) | unsigned(sy) << 1 : unsigned(sy) | unsigned(sx) << 1;
        return mt.at(idx);
    };
    const Rat m00 = at(0, 0), m01 = at(0, 1), m10 = at(1, 0), m11 = at(1, 1);
    if (m00 != m11)
        throw PreconditionViolated("equal-spin masses differ: " + to_frac(m00) + " vs " +
                                   to_frac(m11));
    if (m00 + m11 <= m01 + m10)
        throw PreconditionViolated("equal-spin mass does not dominate the unequal mass");

    // Mirrored second copy makes the pair marginal exactly symmetric.
    Hypergraph doubled = H;
    attach_copy(doubled, H, {x, y}, {y, x});

    Gadget g;
    g.kind = GadgetKind::TEquality;
    g.t = 2;
    g.terminals = {std::min(x, y), std::max(x, y)};
    g.eps_target = eps;
    g.p = m00 * m00;
    g.q = m01 * m10;
    g.h = doubled;

    unsigned long r = 1;
    if (g.q > 0) {
        r = replication_for(g.q / g.p, eps);
        for (unsigned long i = 1; i < r; ++i) attach_copy(g.h, doubled, {x, y}, {x, y});
    }
    g.replication = r;
    const Rat pr = rat_pow(g.p, r), qr = rat_pow(g.q, r);
    g.eps_measured = qr / (pr + qr);
    if (g.eps_measured > eps)
        throw InternalInconsistency("replication failed to reach the requested accuracy");

    if (g.h.n <= opts.cap) {
        MarginalTable check = marginal(f, g.h, {x, y}, {}, opts);
        const Rat denom = 2 * (pr + qr);
        if (check.at(0) != pr / denom || check.at(3) != pr / denom ||
            check.at(1) != qr / denom || check.at(2) != qr / denom)
            throw InternalInconsistency("enumerated pair marginal differs from the product form");
    } else {
        g.analytic_only = true;
    }
    return g;
}

Rat required_delta(int t, const Rat& eps) {
    if (t < 2) throw PreconditionViolated("equality needs at least two terminals");
    check_accuracy_range(eps);
    Rat delta = eps / Rat(Int(1) << (t + 2));
    const Rat rhs = std::max(Rat((1 - eps / 2) / (1 + eps / 2)), Rat(1, 2));
    const auto pairs = binomial(unsigned(t), 2).convert_to<unsigned long>();
    while (rat_pow((1 - delta) / (1 + delta), pairs) < rhs) delta /= 2;
    return delta;
}

Gadget lift_equality(const SymmetricFunction& f, const Gadget& g2, int t, const Rat& eps,
                     const EnumOptions& opts) {
    check_accuracy_range(eps);
    if (g2.kind != GadgetKind::TEquality || g2.t != 2)
        throw BadGadget("lift input must be a 2-terminal equality gadget");
    if (t < 2) throw PreconditionViolated("equality needs at least two terminals");
    if (t == 2) {
        if (g2.eps_measured > eps)
            throw AccuracyInsufficient("2-equality accuracy " + to_frac(g2.eps_measured) +
                                       " exceeds " + to_frac(eps));
        Gadget out = g2;
        out.eps_target = eps;
        return out;
    }
    const Rat delta = g2.eps_measured;
    const Rat need = required_delta(t, eps);
    if (delta > need)
        throw AccuracyInsufficient("need 2-equality accuracy " + to_frac(need) + ", have " +
                                   to_frac(delta));

    Gadget g;
    g.kind = GadgetKind::TEquality;
    g.t = t;
    g.eps_target = eps;
    g.p = g2.p;
    g.q = g2.q;
    g.replication = binomial(unsigned(t), 2);
    g.h = Hypergraph(t);
    for (int i = 0; i < t; ++i) g.terminals.push_back(i);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            attach_copy(g.h, g2.h, g2.terminals, {i, j});

    if (g.h.n <= opts.cap) {
        MarginalTable mt = marginal(f, g.h, g.terminals, {}, opts);
        const Rat all0 = mt.at(0), all1 = mt.at((1u << t) - 1);
        g.eps_measured = 1 - 2 * std::min(all0, all1);
        if (g.eps_measured > eps)
            throw InternalInconsistency("lifted gadget missed the certified accuracy");
    } else {
        g.analytic_only = true;
        g.eps_measured = delta == 0 ? Rat(0) : eps;
    }
    return g;
}

GadgetLibrary standard_library(const SymmetricFunction& f, const Hypergraph& base, int pin_v,
                               int eq_x, int eq_y, const EnumOptions& opts) {
    return [f, base, pin_v, eq_x, eq_y, opts](GadgetKind kind, int t, const Rat& eps) -> Gadget {
        switch (kind) {
            case GadgetKind::PinTo0:
            case GadgetKind::PinTo1:
                if (pin_v < 0) throw BadGadget("library has no pin terminal");
                return power_pinning(f, base, pin_v, kind == GadgetKind::PinTo1 ? 1 : 0, eps,
                                     opts);
            case GadgetKind::TEquality: {
                if (eq_x < 0 || eq_y < 0) throw BadGadget("library has no equality terminals");
                if (t <= 2) return symmetrise_equality(f, base, eq_x, eq_y, eps, opts);
                Gadget g2 = symmetrise_equality(f, base, eq_x, eq_y, required_delta(t, eps), opts);
                return lift_equality(f, g2, t, eps, opts);
            }
            case GadgetKind::Conditional: break;
        }
        throw BadGadget("library cannot build this gadget kind");
    };
}

Gadget realise_conditional(const SymmetricFunction& f, const Hypergraph& H,
                           const AdmissibleCollection& cond, const std::vector<int>& S,
                           const Rat& eps, const GadgetLibrary& lib, const EnumOptions& opts) {
    check_accuracy_range(eps);
    cond.validate(H.n);
    if (!is_admissible(f, H, cond, opts)) throw NotAdmissible();

    std::vector<int> subject = S;
    std::sort(subject.begin(), subject.end());
    subject.erase(std::unique(subject.begin(), subject.end()), subject.end());
    MarginalTable target = marginal(f, H, subject, cond, opts);

    // Peel one pin (or the last equality block) at a time; each level builds
    // the assembly for the remaining conditioning at a finer accuracy, then
    // attaches a library gadget at the peeled set.
    std::function<Hypergraph(const AdmissibleCollection&, std::vector<int>, const Rat&)> build =
        [&](const AdmissibleCollection& V, std::vector<int> scope, const Rat& e) -> Hypergraph {
        if (V.empty()) return H;
        AdmissibleCollection rest = V;
        std::vector<int> X;
        GadgetKind want;
        if (!V.pin0.empty()) {
            X = {V.pin0.front()};
            rest.pin0.erase(rest.pin0.begin());
            want = GadgetKind::PinTo0;
        } else if (!V.pin1.empty()) {
            X = {V.pin1.front()};
            rest.pin1.erase(rest.pin1.begin());
            want = GadgetKind::PinTo1;
        } else {
            X = V.eq_blocks.back();
            rest.eq_blocks.pop_back();
            want = GadgetKind::TEquality;
        }
        const int t = int(X.size());
        const bool equality = want == GadgetKind::TEquality;

        auto good_of = [&](const std::vector<Rat>& sums) {
            return equality ? sums.front() + sums.back()
                            : sums[want == GadgetKind::PinTo1 ? 1 : 0];
        };

        // Exact conditioned mass of the peeled event on the original system.
        auto sums = conditional_sums(f, H, rest, X, opts);
        const Rat total = sum_of(sums), good = good_of(sums);
        if (good == 0) throw InternalInconsistency("admissible event vanished during peeling");
        const Rat M = good / total;
        const Rat e1 = e / 2;
        const Rat e2 = e1 * M * M / 4;
        const Rat e3 = e2 / Rat(Int(1) << scope.size());

        std::vector<int> wider = scope;
        for (int v : X)
            if (std::find(wider.begin(), wider.end(), v) == wider.end()) wider.push_back(v);
        Hypergraph assembled = build(rest, std::move(wider), e3);

        // Accuracy the attached gadget needs, from the exact masses on the
        // assembly so far; chosen as the largest power of 1/2 that works.
        auto asums = conditional_sums(f, assembled, {}, X, opts);
        const Rat atotal = sum_of(asums), agood = good_of(asums);
        if (agood == 0) throw InternalInconsistency("assembly lost the conditioned mass");
        const Rat ratio = (atotal - agood) / agood;
        const Rat budget = e1 / (1 - e1);
        Rat ep(1, 2);
        auto fine_enough = [&](const Rat& cand) {
            const Rat lever = cand / (1 - cand);
            return equality ? lever * (2 * ratio + 2) <= budget : lever * ratio <= budget;
        };
        while (!fine_enough(ep)) ep /= 2;

        Gadget part = lib(want, t, ep);
        if (part.kind != want || (equality && part.t != t))
            throw BadGadget("library returned a gadget of the wrong shape");
        if (part.eps_measured > ep)
            throw AccuracyInsufficient("library gadget misses accuracy " + to_frac(ep));
        attach_copy(assembled, part.h, part.terminals, X);
        return assembled;
    };

    Gadget out;
    out.kind = GadgetKind::Conditional;
    out.terminals = subject;
    out.t = int(subject.size());
    out.eps_target = eps;
    out.target = target.prob;
    out.h = build(cond, subject, eps);

    MarginalTable got = marginal(f, out.h, subject, {}, opts);
    Rat worst = 0;
    for (std::size_t i = 0; i < got.prob.size(); ++i)
        worst = std::max(worst, Rat(abs(got.prob[i] - target.prob[i])));
    out.eps_measured = worst;
    if (worst > eps)
        throw InternalInconsistency("assembled marginal misses the target accuracy");
    return out;
}

ExactEquality exact_equality_search(const SymmetricFunction& f, const EnumOptions& opts) {
    const int k = f.k;
    if (k <= 2) throw PreconditionViolated("arity must exceed 2");
    if (!f.is_boolean() || !f.is_self_dual() || f.w[0] != 0)
        throw PreconditionViolated(
            "equality forcing needs a Boolean self-dual function with zero all-equal weight");
    bool all_zero = true, parity = true;
    for (int l = 0; l <= k; ++l) {
        all_zero = all_zero && f.w[l] == 0;
        parity = parity && f.w[l] == (l % 2 == 1 ? 1 : 0);
    }
    if (all_zero || parity)
        throw PreconditionViolated("constant-zero and odd-parity functions are excluded");

    auto zero_mass = [&](const Hypergraph& h) { return partition_function(f, h, opts) == 0; };

    // Complete k-uniform hypergraph on 2k-1 vertices: some k vertices share a
    // spin, and the edge they span has weight w_0 = w_k = 0.
    Hypergraph minimal = complete_hypergraph(2 * k - 1, k);
    if (!zero_mass(minimal))
        throw InternalInconsistency("complete starting hypergraph has positive mass");

    // Peel edges (lexicographically, to a fixed point) while the partition
    // value stays zero; afterwards every single removal makes it positive.
    bool removed = true;
    while (removed) {
        removed = false;
        auto snapshot = minimal.edges;
        for (const auto& e : snapshot) {
            Hypergraph trial = minimal;
            trial.remove_edge(e);
            if (zero_mass(trial)) {
                minimal = std::move(trial);
                removed = true;
            }
        }
    }
    if (minimal.edges.empty())
        throw InternalInconsistency("edge peeling removed every edge");

    const std::vector<int> e = minimal.edges.front();
    Hypergraph rest = minimal;
    rest.remove_edge(e);
    std::vector<int> shared, isolated;  // split of e by degree in the remainder
    for (int v : e) (rest.degree(v) > 0 ? shared : isolated).push_back(v);
    if (shared.empty())
        throw InternalInconsistency("minimal hypergraph contains an isolated edge");
    const int i = int(shared.size());
    const int base_n = minimal.n;

    // Splice fresh vertices into the shared slots one at a time until the
    // partition value turns positive.
    int j = -1;
    Hypergraph spliced;
    for (int t = 1; t <= i; ++t) {
        Hypergraph ht = rest;
        ht.n = base_n + t;
        std::vector<int> et = isolated;
        for (int a = 0; a < t; ++a) et.push_back(base_n + a);
        for (int a = t; a < i; ++a) et.push_back(shared[a]);
        ht.add_edge(et);
        if (!zero_mass(ht)) {
            j = t;
            spliced = std::move(ht);
            break;
        }
    }
    if (j < 0) throw InternalInconsistency("splicing never produced positive mass");

    ExactEquality res;
    res.x = base_n + j - 1;  // last spliced vertex
    res.y = base_n + j;      // its duplicate
    res.h = spliced;
    res.h.n = base_n + j + 1;
    std::vector<int> dup = isolated;
    for (int a = 0; a < j - 1; ++a) dup.push_back(base_n + a);
    dup.push_back(res.y);
    for (int a = j; a < i; ++a) dup.push_back(shared[a]);
    res.h.add_edge(dup);

    auto sums = conditional_sums(f, res.h, {}, {res.x, res.y}, opts);
    res.z0 = sums[0];
    res.z1 = sums[3];
    res.z = sums[0] + sums[1] + sums[2] + sums[3];
    if (sums[1] != 0 || sums[2] != 0)
        throw InternalInconsistency("a positive-weight configuration splits the terminals");
    if (res.z0 != res.z1 || res.z0 == 0)
        throw InternalInconsistency("equal-spin masses are unbalanced or vanish");
    return res;
}

std::pair<bool, Rat> verify_realisation(const SymmetricFunction& f, const Gadget& g,
                                        const EnumOptions& opts) {
    switch (g.kind) {
        case GadgetKind::PinTo0:
        case GadgetKind::PinTo1: {
            MarginalTable mt = marginal(f, g.h, g.terminals, {}, opts);
            Rat bad = mt.at(g.kind == GadgetKind::PinTo0 ? 1 : 0);
            return {bad <= g.eps_target, bad};
        }
        case GadgetKind::TEquality: {
            MarginalTable mt = marginal(f, g.h, g.terminals, {}, opts);
            const unsigned top = (1u << g.terminals.size()) - 1;
            Rat meas = 1 - 2 * std::min(mt.at(0), mt.at(top));
            return {meas <= g.eps_target, meas};
        }
        case GadgetKind::Conditional: {
            MarginalTable mt = marginal(f, g.h, g.terminals, {}, opts);
            if (mt.prob.size() != g.target.size())
                throw BadGadget("target table size does not match the terminal count");
            Rat meas = 0;
            for (std::size_t i = 0; i < mt.prob.size(); ++i)
                meas = std::max(meas, Rat(abs(mt.prob[i] - g.target[i])));
            return {meas <= g.eps_target, meas};
        }
    }
    throw BadGadget("unknown gadget kind");
}

}  // namespace spinlab

// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// nine pass.  Every numeric claim here is checked exactly (rationals) unless
// the quantity is intrinsically floating point (tree thresholds).

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spinlab/classify.hpp"
#include "spinlab/gadgets.hpp"
#include "spinlab/reduction.hpp"
#include "spinlab/uniqueness.hpp"
#include "test_util.hpp"

using namespace spinlab;

namespace {

int failures = 0;

void report(int num, const std::string& label, bool ok) {
    std::cout << "criterion " << num << " (" << label << "): " << (ok ? "PASS" : "FAIL")
              << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Hypergraph single_edge(int k) {
    Hypergraph h(k);
    std::vector<int> e(k);
    for (int i = 0; i < k; ++i) e[i] = i;
    h.add_edge(e);
    return h;
}

SpinSystemParams params(Rat b, Rat g, Rat l, int d) {
    SpinSystemParams p;
    p.beta = std::move(b);
    p.gamma = std::move(g);
    p.lambda = std::move(l);
    p.delta = d;
    return p;
}

// 1. Edge-replacement identity: the frozen 545 oracle plus 50 random triples.
bool criterion1() {
    EnumOptions opts;
    opts.shards = 8;
    auto t0 = std::chrono::steady_clock::now();
    auto r = verify_edge_replacement(fn_weak_is(3), complete_graph(4), single_edge(3), 0, 1, opts);
    bool ok = r.ok && r.lhs == 545 && r.beta == 1 && r.gamma == Rat(1, 2) &&
              seconds_since(t0) < 1.0;

    std::mt19937 rng(101);
    int done = 0;
    for (int it = 0; it < 600 && done < 50; ++it) {
        auto f = random_rational_fn(rng, 3);
        auto h = random_hypergraph(rng, 3 + int(rng() % 3), 3, 3, false);
        int gn = 2 + int(rng() % 4);
        Graph g(gn);
        for (int u = 0; u < gn; ++u)
            for (int v = u + 1; v < gn; ++v)
                if (rng() % 2) g.add_edge(u, v);
        try {
            auto s = symmetrise_witness(f, h, 0, 1, opts);
            if (g.n + int(g.edges.size()) * (s.h.n - 2) > 24) continue;
            auto c = verify_edge_replacement(f, g, s.h, s.x, s.y, opts);
            if (!c.ok) ok = false;
            ++done;
        } catch (const ZeroOffDiagonal&) {
        }
    }
    return ok && done == 50;
}

// 2. Tree uniqueness thresholds for the hard-core and symmetric models.
bool criterion2() {
    bool ok = true;
    for (int d = 3; d <= 5; ++d)
        ok = ok && uniqueness_verdict(params(0, 1, 1, d)) == Verdict::Unique;
    for (int d = 6; d <= 12; ++d)
        ok = ok && uniqueness_verdict(params(0, 1, 1, d)) == Verdict::NonUnique;

    Rat lc = lambda_c(1, 5);
    ok = ok && lc == Rat(3125, 4096);
    std::ostringstream digits;
    digits.precision(12);
    digits << to_double(lc);
    ok = ok && digits.str() == "0.762939453125";

    auto a = analyze_tree(params(Rat(1, 2), Rat(1, 2), 1, 6));
    ok = ok && a.lambda1.has_value() && a.lambda2.has_value();
    if (ok) {
        ok = ok && std::abs(*a.lambda1 * *a.lambda2 - 1.0) < 1e-9;
        ok = ok && *a.lambda1 < 1.0 && 1.0 < *a.lambda2;
    }
    return ok;
}

// 3. Classification catalog with the frozen witness tables.
bool criterion3() {
    bool ok = true;
    auto timed = [&](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        ok = ok && seconds_since(t0) < 1.0;
    };

    timed([&] { ok = ok && case_trichotomy(fn_weak_is(3)).tag == CaseTag::CaseIII_pin0; });
    timed([&] {
        auto f = fn_strong_is(3);
        auto rep = case_trichotomy(f);
        ok = ok && rep.tag == CaseTag::CaseIII_pin0;
        auto w = witness_search(f, rep);
        ok = ok && w.mu == PairTable{Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(0)};
        auto c = min_delta_certificate(w);
        ok = ok && c.beta0 == 0 && c.gamma0 == 1;
    });
    timed([&] {
        auto rep = case_trichotomy(fn_nae(3));
        ok = ok && rep.tag == CaseTag::CaseII_w0_zero;
        ok = ok && !csp_decision_verdict(fn_nae(3)).tractable;
    });
    for (int k = 3; k <= 4; ++k) {
        for (auto f : {fn_even(k), fn_odd(k), fn_eq(k), fn_all_zero(k), fn_all_one(k),
                       fn_zero(k), fn_one(k)}) {
            timed([&] { ok = ok && case_trichotomy(f).easy.has_value(); });
        }
    }
    return ok;
}

// 4. Gadget certification records with exact measured masses.
bool criterion4() {
    EnumOptions opts;
    opts.shards = 8;
    auto pin = power_pinning(fn_weak_is(3), single_edge(3), 0, 0, Rat(1, 20), opts);
    Rat p12 = rat_pow(Rat(4, 7), 12), q12 = rat_pow(Rat(3, 7), 12);
    bool ok = pin.replication == 12 && pin.eps_measured == q12 / (p12 + q12) &&
              pin.eps_measured <= Rat(1, 20) && !pin.analytic_only;

    auto eq = symmetrise_equality(fn_nae(3), pair_hypergraph(3), 0, 1, Rat(1, 100), opts);
    ok = ok && eq.replication == 7 && eq.q != 0 && eq.p / eq.q == Rat(9, 4) &&
         eq.eps_measured <= Rat(1, 100);
    return ok;
}

// 5. Exact equality forcing for the three-ary not-all-equal function.
bool criterion5() {
    auto f = fn_nae(3);
    bool ok = partition_function(f, complete_hypergraph(5, 3)) == 0;

    auto eq = exact_equality_search(f);
    ok = ok && eq.z > 0 && eq.z0 == eq.z1 && eq.z0 > 0;
    auto sums = conditional_sums(f, eq.h, {}, {eq.x, eq.y});
    ok = ok && sums.at(1) == 0 && sums.at(2) == 0;  // terminals never disagree
    ok = ok && sums.at(0) + sums.at(3) == eq.z;
    return ok;
}

// 6. Variable splitting identity plus the zero-equivalence property.
bool criterion6() {
    auto f = fn_nae(3);
    auto eq = exact_equality_search(f);
    CspInstance xxy;
    xxy.vars = 2;
    xxy.constraints = {{0, 0, 1}};
    auto r = csp_split(f, xxy, eq);
    bool ok = r.ok && r.z_h == r.zeta * 2;

    EnumOptions opts;
    opts.shards = 8;
    const int chain_extra = eq.h.n - 2;
    std::mt19937 rng(606);
    int done = 0;
    for (int it = 0; it < 600 && done < 20; ++it) {
        CspInstance inst;
        inst.vars = 1 + int(rng() % 4);
        int ncons = 1 + int(rng() % 3);
        for (int c = 0; c < ncons; ++c) {
            std::vector<int> slots(3);
            for (int& s : slots) s = int(rng() % inst.vars);
            inst.constraints.push_back(slots);
        }
        auto uses = inst.use_counts();
        int pred = 0;
        for (int u : uses) pred += std::max(1, u) + chain_extra * std::max(0, u - 1);
        if (pred > 22) continue;
        auto rr = csp_split(f, inst, eq, opts);
        if (!rr.ok || (rr.z_h == 0) != (rr.z_csp == 0)) ok = false;
        ++done;
    }
    return ok && done == 20;
}

// 7. Property suites (a)-(f).
bool criterion7() {
    bool ok = true;
    std::mt19937 rng(707);

    // (a) Cauchy-Schwarz for the two-edge pair table: z01^2 <= z00 * z11.
    for (int it = 0; it < 200; ++it) {
        auto f = random_rational_fn(rng, 2 + it % 9);
        auto t = pair_gadget(f);
        if (!(t.z01 * t.z01 <= t.z00 * t.z11)) ok = false;
    }

    // (b) binomial log-concavity gap, all 435 pairs, equality only at (2,2).
    for (unsigned n = 2; n <= 30; ++n) {
        for (unsigned i = 2; i <= n; ++i) {
            Int lhs = (1 + binomial(n, i)) * (1 + binomial(n, i - 2));
            Int rhs = binomial(n, i - 1) * binomial(n, i - 1);
            if (!(lhs <= rhs)) ok = false;
            if ((lhs == rhs) != (n == 2 && i == 2)) ok = false;
        }
    }

    // (c) self-dual functions balance the table and give complement-symmetric
    //     marginals.
    for (int it = 0; it < 200; ++it) {
        int k = 2 + it % 9;
        auto f = random_self_dual_fn(rng, k);
        auto b = zbal_table(f);
        for (int t = 0; t < k; ++t)
            if (b.z0[t] != b.z1[t]) ok = false;
        if (it % 4 == 0 && k <= 4) {
            auto h = random_hypergraph(rng, std::max(k, 4 + int(rng() % 9)), k, 4, false);
            std::vector<int> subject{0, 1};
            try {
                auto m = marginal(f, h, subject);
                unsigned full = (1u << subject.size()) - 1;
                for (unsigned tau = 0; tau <= full; ++tau)
                    if (m.at(tau) != m.at(full ^ tau)) ok = false;
            } catch (const NotAdmissible&) {
            }
        }
    }

    // (d) closed-form partition values match brute force for the easy family.
    {
        int cases = 0;
        while (cases < 200) {
            int k = 2 + int(rng() % 3);
            auto h = random_hypergraph(rng, std::max(k, 3 + int(rng() % 10)), k, 5);
            for (auto f : {fn_even(k), fn_odd(k), fn_eq(k), fn_all_zero(k), fn_all_one(k),
                           fn_zero(k), fn_one(k)}) {
                if (easy_partition(f, h) != partition_function(f, h)) ok = false;
                ++cases;
            }
        }
    }

    // (e) every non-constant function certifies at least one support.
    for (int it = 0; it < 200; ++it) {
        auto f = random_rational_fn(rng, 2 + it % 5);
        if (f.is_constant()) continue;
        auto s = support_verdict(f);
        if (s.pin0 != Support::Yes && s.pin1 != Support::Yes && s.equality != Support::Yes)
            ok = false;
    }

    // (f) marginals are distributions and independent of the shard split.
    for (int it = 0; it < 200; ++it) {
        int k = 2 + it % 2;
        auto f = random_rational_fn(rng, k);
        auto h = random_hypergraph(rng, std::max(k, 3 + int(rng() % 8)), k, 4, false);
        std::vector<int> subject{0, int(1 + rng() % (h.n - 1))};
        if (subject[1] == subject[0]) subject[1] = h.n - 1;
        EnumOptions one, many;
        many.shards = 3;
        try {
            auto m1 = marginal(f, h, subject, {}, one);
            auto m2 = marginal(f, h, subject, {}, many);
            Rat total = 0;
            for (const auto& v : m1.prob) total += v;
            if (total != 1 || m1.prob != m2.prob) ok = false;
        } catch (const NotAdmissible&) {
        }
    }
    return ok;
}

// 8. Normal-form identity on K4 and verdict invariance under normalisation.
bool criterion8() {
    bool ok = true;
    Graph k4 = complete_graph(4);
    std::mt19937 rng(808);
    int done = 0;
    for (int it = 0; it < 500 && done < 20; ++it) {
        Rat b(int(rng() % 8), 8), g(1 + int(rng() % 12), 8), lam(1 + int(rng() % 30), 4);
        if (b * g >= 1 || g == 0) continue;

        // partition identity at delta = 3 (K4 is 3-regular)
        double bd = to_double(b), gd = to_double(g), ld = to_double(lam);
        double lhs = binary_partition_d(bd, gd, ld, k4);
        double rhs;
        if (b == 0) {
            rhs = std::pow(gd, 6.0) * binary_partition_d(0, 1, ld / std::pow(gd, 3.0), k4);
        } else {
            double s = std::sqrt(bd * gd);
            rhs = std::pow(std::sqrt(gd / bd), 6.0) *
                  binary_partition_d(s, s, ld * std::pow(bd / gd, 1.5), k4);
        }
        if (!(std::abs(lhs - rhs) / lhs < 1e-9)) ok = false;

        // verdict invariance
        auto p = params(b, g, lam, 3 + int(rng() % 6));
        try {
            Verdict v1 = uniqueness_verdict(p);
            Verdict v2 = uniqueness_verdict(normalise(p));
            if (v1 != Verdict::Indeterminate && v2 != Verdict::Indeterminate && v1 != v2)
                ok = false;
        } catch (const PreconditionViolated&) {
        }
        ++done;
    }
    return ok && done == 20;
}

// 9. Degree certificate at beta0 = 0 with an in-strip spot check.
bool criterion9() {
    auto rep = strip_certificate(0);
    bool ok = !rep.checks.empty();
    for (const auto& c : rep.checks) ok = ok && c.ok;
    auto d = rep.delta_int();
    ok = ok && d.has_value();
    if (ok) {
        auto v = uniqueness_verdict(
            params(Rat(1, 2 * *d), Rat(2 * *d + 1, 2 * *d), 1, *d));
        ok = ok && v == Verdict::NonUnique;
    }
    return ok;
}

}  // namespace

int main() {
    report(1, "edge-replacement identity, exact, 50 random triples", criterion1());
    report(2, "tree uniqueness thresholds", criterion2());
    report(3, "classification catalog", criterion3());
    report(4, "gadget certification records", criterion4());
    report(5, "exact equality forcing", criterion5());
    report(6, "CSP variable splitting", criterion6());
    report(7, "property suites (a)-(f)", criterion7());
    report(8, "normal-form identity and verdict invariance", criterion8());
    report(9, "degree certificate with spot check", criterion9());
    if (failures == 0) {
        std::cout << "all 9 acceptance criteria PASS" << std::endl;
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED" << std::endl;
    return 1;
}

#include "spinlab/uniqueness.hpp"

#include <bit>
#include <climits>
#include <cmath>
#include <limits>

namespace spinlab {

namespace {

constexpr double kTol = 1e-9;

double h_of(double beta, double gamma, double lambda, int d, double x) {
    return lambda * std::pow((beta * x + 1) / (x + gamma), d);
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Unique: return "UNIQUE";
        case Verdict::NonUnique: return "NONUNIQUE";
        case Verdict::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

double fixed_point(const SpinSystemParams& p) {
    if (!p.antiferro()) throw NotAntiferro();
    if (p.lambda <= 0) throw PreconditionViolated("lambda must be positive");
    const int d = p.delta - 1;
    const double beta = to_double(p.beta), gamma = to_double(p.gamma),
                 lambda = to_double(p.lambda);

    // h is strictly decreasing, so x - h(x) has a single sign change.
    double lo = gamma > 0 ? 0.0 : 1e-30;
    double hi = 1.0;
    while (hi - h_of(beta, gamma, lambda, d, hi) < 0) hi *= 2;
    for (int it = 0; it < 500; ++it) {
        double mid = 0.5 * (lo + hi);
        double r = mid - h_of(beta, gamma, lambda, d, mid);
        if (std::abs(r) < 1e-13 && it > 60) return mid;
        (r < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Rat lambda_c(const Rat& gamma, int d) {
    if (d < 2) throw PreconditionViolated("degree too small");
    return rat_pow(gamma, d + 1) * rat_pow(Rat(d), d) / rat_pow(Rat(d - 1), d + 1);
}

std::pair<double, double> critical_interval(const Rat& beta, const Rat& gamma, int delta) {
    const int d = delta - 1;
    if (gamma <= 0) throw PreconditionViolated("gamma must be positive");
    if (beta == 0) return {0.0, to_double(lambda_c(gamma, d))};
    const double b = to_double(beta), g = to_double(gamma);
    // Two distinct positive roots require sqrt(beta*gamma) < (d-1)/(d+1).
    if (!(std::sqrt(b * g) < double(d - 1) / (d + 1))) throw NoInterval();
    const double T = (d - 1) - (d + 1) * b * g;
    const double root = std::sqrt(T * T - 4 * b * g);
    const double x1 = 2 * g / (T + root);  // conjugate form: no cancellation
    const double x2 = (T + root) / (2 * b);
    auto lam = [&](double x) { return x * std::pow((x + g) / (b * x + 1), d); };
    return {lam(x1), lam(x2)};
}

TreeAnalysis analyze_tree(const SpinSystemParams& p) {
    if (!p.antiferro()) throw NotAntiferro();
    if (p.gamma == 0) throw PreconditionViolated("gamma = 0 is not analyzed; spin-swap first");
    TreeAnalysis a;
    const int d = p.delta - 1;
    const double beta = to_double(p.beta), gamma = to_double(p.gamma),
                 lambda = to_double(p.lambda);
    a.x_star = fixed_point(p);
    a.h_prime = a.x_star * d * (beta * gamma - 1) / ((beta * a.x_star + 1) * (a.x_star + gamma));
    double dev = std::abs(a.h_prime);

    Verdict primary = std::abs(dev - 1) <= kTol ? Verdict::Indeterminate
                      : dev < 1                 ? Verdict::Unique
                                                : Verdict::NonUnique;

    // Cross-check via the critical lambda interval in the soft regime.
    Verdict secondary = Verdict::Indeterminate;
    double sb = std::sqrt(beta * gamma);
    double thr = double(p.delta - 2) / p.delta;
    if (sb > thr + kTol) {
        secondary = Verdict::Unique;
    } else if (sb < thr - kTol) {
        auto [l1, l2] = critical_interval(p.beta, p.gamma, p.delta);
        a.lambda1 = l1;
        a.lambda2 = l2;
        if (p.beta == 0) {
            // Hard-core side: the reported pair is (0, lambda_c) and the
            // non-uniqueness region is lambda > lambda_c.
            if (lambda > l2 + kTol)
                secondary = Verdict::NonUnique;
            else if (lambda < l2 - kTol)
                secondary = Verdict::Unique;
        } else {
            const double T = (d - 1) - (d + 1) * beta * gamma;
            const double root = std::sqrt(T * T - 4 * beta * gamma);
            a.x1 = 2 * gamma / (T + root);
            a.x2 = (T + root) / (2 * beta);
            if (lambda > l1 + kTol && lambda < l2 - kTol)
                secondary = Verdict::NonUnique;
            else if (lambda < l1 - kTol || lambda > l2 + kTol)
                secondary = Verdict::Unique;
        }
    }
    if (primary != Verdict::Indeterminate && secondary != Verdict::Indeterminate &&
        primary != secondary)
        throw InconsistentCriteria("derivative test and interval test disagree");
    a.verdict = primary != Verdict::Indeterminate ? primary : secondary;
    return a;
}

Verdict uniqueness_verdict(const SpinSystemParams& p) { return analyze_tree(p).verdict; }

SpinSystemParams normalise(const SpinSystemParams& p) {
    if (!p.antiferro()) throw NotAntiferro();
    if (p.gamma <= 0) throw PreconditionViolated("normalisation requires gamma > 0");
    SpinSystemParams q;
    q.delta = p.delta;
    if (p.beta == 0) {
        q.beta = 0;
        q.gamma = 1;
        q.lambda = p.lambda / rat_pow(p.gamma, p.delta);
        return q;
    }
    if (p.beta == p.gamma) {  // already in the symmetric normal form; keep exact
        q.beta = p.beta;
        q.gamma = p.gamma;
        q.lambda = p.lambda;
        return q;
    }
    // sqrt(beta*gamma) is irrational in general; this module is binary64, so
    // the normal form is the exact rational image of the rounded doubles.
    double s = std::sqrt(to_double(p.beta) * to_double(p.gamma));
    q.beta = q.gamma = Rat(s);
    q.lambda = Rat(to_double(p.lambda) *
                   std::pow(to_double(p.beta) / to_double(p.gamma), p.delta / 2.0));
    return q;
}

// ---------------------------------------------------------------------------
// Strip certificate

namespace {

double ln_int(const Int& v) {
    using boost::multiprecision::msb;
    if (v <= 0) throw PreconditionViolated("log of nonpositive integer");
    std::size_t bits = msb(v);
    if (bits <= 900) return std::log(v.convert_to<double>());
    Int top = v >> (bits - 52);
    return std::log(top.convert_to<double>()) + double(bits - 52) * std::log(2.0);
}

// d * log1p(2s/T) evaluated stably when T = d*c (so the product tends to 2s/c).
double d_log1p(const Int& d, double c, double s) {
    // T = d*c; d*log1p(s*2/T) = (2s/c) * (T/(2s) * log1p(2s/T))
    double Td;
    if (boost::multiprecision::msb(d) < 900)
        Td = d.convert_to<double>() * c;
    else
        Td = std::numeric_limits<double>::infinity();
    double u = 2 * s / c;
    if (!std::isfinite(Td)) return u;  // limit T->inf of T/(2s)*log1p(2s/T) is 1
    return u * (Td / (2 * s) * std::log1p(2 * s / Td));
}

struct StripEval {
    bool ok = true;
    std::vector<StripInequality> checks;
    void add(std::string name, double lhs, double rhs, bool pass) {
        checks.push_back({std::move(name), lhs, rhs, pass});
        ok = ok && pass;
    }
};

StripEval eval_strip(const Rat& beta0, const Int& d) {
    StripEval e;
    const Rat eps(1, d + 1);  // epsilon = 1/Delta
    if (beta0 == 0) {
        double dd = d.convert_to<double>();
        e.add("d >= 10", dd, 10, d >= 10);
        if (d < 4) return e;
        // lambda_c(1+eps, d) < 1, in logs
        double le = to_double(eps);
        double lc = (dd + 1) * std::log1p(le) + dd * std::log(dd) - (dd + 1) * std::log(dd - 1);
        e.add("ln lambda_c(1+eps,d) < 0", lc, 0, lc < -kTol);
        double T = dd - 3;
        e.add("T = d-3 > 2", T, 2, T > 2 + kTol);
        if (T <= 2) return e;
        double l1 = std::log(6.0) - std::log(T) + dd * std::log1p(2 / T);
        double l2 = std::log(T / 2) + dd * std::log1p(-2 / T);
        e.add("ln lambda1 upper bound < 0", l1, 0, l1 < -kTol);
        e.add("ln lambda2 lower bound > 0", l2, 0, l2 > kTol);
        return e;
    }

    // Soft-constrained case.  Region corner: beta_max = beta0+eps,
    // gamma_max = 1+eps.  All region checks are exact rational comparisons.
    const Rat beta_max = beta0 + eps, gamma_max = 1 + eps;
    bool delta_big = Rat(d + 1) * beta0 > 1;
    e.add("Delta > 1/beta0", 0, 0, delta_big);
    bool bmax_lt1 = beta_max < 1;
    e.add("beta0 + eps < 1", to_double(beta_max), 1, bmax_lt1);
    if (!bmax_lt1) return e;
    // sqrt(beta_max*gamma_max) < (d-1)/(d+1), squared to stay rational
    bool soft = beta_max * gamma_max * rat_pow(Rat(d + 1), 2) < rat_pow(Rat(d - 1), 2);
    e.add("sqrt(bg) < (d-1)/(d+1) at corner", 0, 0, soft);
    // worst-corner T against the certified lower bound d(1-beta0)/2
    const Rat t_wc = Rat(d - 1) - Rat(d + 1) * beta_max * gamma_max;
    const Rat t_lb = Rat(d) * (1 - beta0) / 2;
    e.add("T(corner) >= d(1-beta0)/2", to_double(t_wc / t_lb), 1, t_wc >= t_lb);
    // gamma_max^{d+1} < 3 (used by the lambda bound chain); holds for d >= 2
    e.add("(1+eps)^{d+1} < 3", 0, std::log(3.0), d >= 2);

    const double c = to_double((1 - beta0) / 2);  // T_lb = d*c
    double lnT = ln_int(d) + std::log(c);
    bool t_big = lnT > std::log(2.0) + kTol;
    e.add("T > 2", lnT, std::log(2.0), t_big);
    if (!t_big) return e;
    double l1 = std::log(6.0) - lnT + d_log1p(d, c, 1);
    double l2 = lnT - std::log(2.0) + d_log1p(d, c, -1);
    e.add("ln lambda1 upper bound < 0", l1, 0, l1 < -kTol);
    e.add("ln lambda2 lower bound > 0", l2, 0, l2 > kTol);
    return e;
}

}  // namespace

std::optional<int> StripReport::delta_int() const {
    if (delta > INT_MAX) return std::nullopt;
    return delta.convert_to<int>();
}

StripReport strip_certificate(const Rat& beta0) {
    if (beta0 < 0 || beta0 >= 1)
        throw PreconditionViolated("beta0 must lie in [0,1)");
    // Small degrees: exact upward scan for the smallest certified d.
    for (Int d = 2; d <= 4096; ++d) {
        auto e = eval_strip(beta0, d);
        if (e.ok) return {d + 1, e.checks};
    }
    // Large degrees: gallop then bisect.  The certificate inequalities are
    // eventually monotone in d; the scan above pins down the small range.
    Int lo = 4096, hi = 8192;
    while (!eval_strip(beta0, hi).ok) {
        lo = hi;
        hi *= 2;
        if (boost::multiprecision::msb(hi) > (1u << 22))
            throw InternalInconsistency("strip certificate search exceeded practical range");
    }
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        (eval_strip(beta0, mid).ok ? hi : lo) = mid;
    }
    auto e = eval_strip(beta0, hi);
    return {hi + 1, e.checks};
}

// ---------------------------------------------------------------------------
// Binary partition function

Rat binary_partition(const Rat& beta, const Rat& gamma, const Rat& lambda, const Graph& g,
                     int cap) {
    if (g.n > cap || g.n > 62) throw CapExceeded(g.n, std::min(cap, 62));
    Rat z = 0;
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t(1) << g.n); ++sigma) {
        int zeros = g.n - std::popcount(sigma);
        int e00 = 0, e11 = 0;
        for (auto [u, v] : g.edges) {
            bool su = (sigma >> u) & 1, sv = (sigma >> v) & 1;
            e00 += !su && !sv;
            e11 += su && sv;
        }
        // 0^0 == 1 convention: skip zero bases with zero exponents.
        if ((beta == 0 && e00 > 0) || (gamma == 0 && e11 > 0) || (lambda == 0 && zeros > 0))
            continue;
        z += rat_pow(lambda, zeros) * rat_pow(beta, e00) * rat_pow(gamma, e11);
    }
    return z;
}

double binary_partition_d(double beta, double gamma, double lambda, const Graph& g, int cap) {
    if (g.n > cap || g.n > 62) throw CapExceeded(g.n, std::min(cap, 62));
    double z = 0;
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t(1) << g.n); ++sigma) {
        int zeros = g.n - std::popcount(sigma);
        int e00 = 0, e11 = 0;
        for (auto [u, v] : g.edges) {
            bool su = (sigma >> u) & 1, sv = (sigma >> v) & 1;
            e00 += !su && !sv;
            e11 += su && sv;
        }
        auto p = [](double b, int e) { return e == 0 ? 1.0 : std::pow(b, e); };
        z += p(lambda, zeros) * p(beta, e00) * p(gamma, e11);
    }
    return z;
}

}  // namespace spinlab

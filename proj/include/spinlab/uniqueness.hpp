#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinlab/graph.hpp"
#include "spinlab/rational.hpp"

namespace spinlab {

// Binary 2-spin system on the infinite Delta-regular tree.  This module is
// the only one allowed to use floating point; every verdict within 1e-9 of a
// decision boundary is reported Indeterminate instead of guessed.
struct SpinSystemParams {
    Rat beta, gamma, lambda;
    int delta = 3;

    bool antiferro() const { return beta * gamma < 1; }
};

enum class Verdict { Unique, NonUnique, Indeterminate };
const char* verdict_name(Verdict v);

struct TreeAnalysis {
    double x_star = 0;
    double h_prime = 0;  // h'(x*)
    std::optional<double> x1, x2, lambda1, lambda2;
    Verdict verdict = Verdict::Indeterminate;
};

double fixed_point(const SpinSystemParams& p);

TreeAnalysis analyze_tree(const SpinSystemParams& p);
Verdict uniqueness_verdict(const SpinSystemParams& p);

// (lambda1, lambda2) between which |h'(x*)| > 1; beta=0 returns (0, lambda_c).
std::pair<double, double> critical_interval(const Rat& beta, const Rat& gamma, int delta);

// lambda_c(gamma, d) = gamma^{d+1} d^d / (d-1)^{d+1}, exact.
Rat lambda_c(const Rat& gamma, int d);

// Ising / hard-core normal form preserving the uniqueness verdict.
SpinSystemParams normalise(const SpinSystemParams& p);

struct StripInequality {
    std::string name;
    double lhs = 0, rhs = 0;
    bool ok = false;
};
struct StripReport {
    // Certified degree; may be astronomically large when beta0 approaches 1,
    // hence an arbitrary-precision integer.
    Int delta = 0;
    std::vector<StripInequality> checks;
    std::optional<int> delta_int() const;  // when it fits a machine int
};

// Smallest Delta (searched from 3) for which the sufficient non-uniqueness
// inequalities hold over the whole strip around beta0 at lambda=1.
StripReport strip_certificate(const Rat& beta0);

// Exact binary 2-spin partition function on a graph, convention 0^0 = 1.
Rat binary_partition(const Rat& beta, const Rat& gamma, const Rat& lambda, const Graph& g,
                     int cap = 26);
double binary_partition_d(double beta, double gamma, double lambda, const Graph& g,
                          int cap = 26);

}  // namespace spinlab

#include "spinlab/rational.hpp"

namespace spinlab {

std::string to_frac(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("bad rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) bad();
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat acc = 1, b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

}  // namespace spinlab

#include "spinlab/classify.hpp"

#include <algorithm>
#include <bit>

namespace spinlab {

const char* easy_name(EasyName e) {
    switch (e) {
        case EasyName::Zero: return "Zero";
        case EasyName::One: return "One";
        case EasyName::AllZero: return "AllZero";
        case EasyName::AllOne: return "AllOne";
        case EasyName::Eq: return "Eq";
        case EasyName::Even: return "Even";
        case EasyName::Odd: return "Odd";
    }
    return "?";
}

const char* support_name(Support s) {
    switch (s) {
        case Support::Yes: return "yes";
        case Support::No: return "no";
        case Support::Unknown: return "unknown";
    }
    return "?";
}

const char* polymorphism_name(Polymorphism g) {
    switch (g) {
        case Polymorphism::Minority: return "minority";
        case Polymorphism::G0: return "g0";
        case Polymorphism::G1: return "g1";
        case Polymorphism::And: return "AND";
        case Polymorphism::Or: return "OR";
        case Polymorphism::Maj: return "Maj";
    }
    return "?";
}

const char* case_name(CaseTag c) {
    switch (c) {
        case CaseTag::Easy: return "EASY";
        case CaseTag::CaseI: return "I";
        case CaseTag::CaseII_w0_zero: return "II (w0=0)";
        case CaseTag::CaseII_w0_one: return "II (w0=1)";
        case CaseTag::CaseIII_pin0: return "III (pin0)";
        case CaseTag::CaseIII_pin1: return "III (pin1)";
    }
    return "?";
}

std::optional<EasyName> detect_easy(const SymmetricFunction& f) {
    const int k = f.k;
    if (f.w == fn_zero(k).w) return EasyName::Zero;
    if (f.w == fn_one(k).w) return EasyName::One;
    if (f.w == fn_all_zero(k).w) return EasyName::AllZero;
    if (f.w == fn_all_one(k).w) return EasyName::AllOne;
    if (f.w == fn_eq(k).w) return EasyName::Eq;
    if (f.w == fn_even(k).w) return EasyName::Even;
    if (f.w == fn_odd(k).w) return EasyName::Odd;
    return std::nullopt;
}

bool is_self_dual(const SymmetricFunction& f) { return f.is_self_dual(); }

PairGadgetTable pair_gadget(const SymmetricFunction& f) {
    PairGadgetTable t;
    for (int l = 0; l < f.k; ++l) {
        Rat c(binomial(f.k - 1, l));
        t.z00 += c * f.w[l] * f.w[l];
        t.z01 += c * f.w[l] * f.w[l + 1];
        t.z11 += c * f.w[l + 1] * f.w[l + 1];
    }
    return t;
}

// ---------------------------------------------------------------------------
// Support search on conditioned single edges

namespace {

// Conditional pair of masses for one free vertex (or all-equal masses for the
// whole free block) on a single k-edge with a slots pinned 0, b slots pinned 1,
// `blocks` equality blocks and m free slots.  All sums are exact.
struct SlotConditioning {
    int a = 0, b = 0, m = 0;
    std::vector<int> blocks;
};

// Iterates over the 2^|blocks| block assignments, handing the number of
// spin-1 slots they contribute to `fn`.
template <typename F>
void for_block_ones(const std::vector<int>& blocks, F fn) {
    unsigned count = unsigned(1) << blocks.size();
    for (unsigned c = 0; c < count; ++c) {
        int ones = 0;
        for (size_t i = 0; i < blocks.size(); ++i)
            if ((c >> i) & 1) ones += blocks[i];
        fn(ones);
    }
}

Rat cond_mass(const SymmetricFunction& f, const SlotConditioning& sc, int forced_ones,
              int free_slots) {
    // Mass with `free_slots` unconstrained slots and `forced_ones` spin-1
    // slots beyond the block contributions.
    Rat total = 0;
    for_block_ones(sc.blocks, [&](int block_ones) {
        for (int l = 0; l <= free_slots; ++l)
            total += Rat(binomial(free_slots, l)) * f.w[sc.b + forced_ones + block_ones + l];
    });
    return total;
}

bool monotone_nonincreasing(const SymmetricFunction& f) {
    for (int l = 0; l < f.k; ++l)
        if (f.w[l] < f.w[l + 1]) return false;
    return true;
}

bool monotone_nondecreasing(const SymmetricFunction& f) {
    for (int l = 0; l < f.k; ++l)
        if (f.w[l] > f.w[l + 1]) return false;
    return true;
}

}  // namespace

SupportVerdict support_verdict(const SymmetricFunction& f, int budget) {
    SupportVerdict v;
    const int k = f.k;

    if (f.is_constant()) {
        // Zero admits no Gibbs distribution; a nonzero constant makes every
        // Gibbs distribution uniform, so no marginal ever leaves 1/2 and no
        // all-equal event of >= 2 vertices can reach mass (1-eps)/2.
        v.pin0 = v.pin1 = v.equality = Support::No;
        v.pin0_why = v.pin1_why = v.equality_why = "constant function";
        return v;
    }

    if (f.is_self_dual()) {
        v.pin0 = v.pin1 = Support::No;
        v.pin0_why = v.pin1_why = "self-dual: complement symmetry forces marginal 1/2";
    } else {
        // Flipping one vertex from its disfavored spin never decreases the
        // weight when the weight vector is monotone, so the majority spin
        // marginal is >= 1/2 on every instance.
        if (monotone_nonincreasing(f)) {
            v.pin1 = Support::No;
            v.pin1_why = "monotone weights: spin-1 marginal <= 1/2 on every instance";
        }
        if (monotone_nondecreasing(f)) {
            v.pin0 = Support::No;
            v.pin0_why = "monotone weights: spin-0 marginal <= 1/2 on every instance";
        }
    }

    PairGadgetTable pg = pair_gadget(f);
    if (pg.z00 > pg.z11 && v.pin0 != Support::Yes) {
        v.pin0 = Support::Yes;
        v.pin0_why = "pair gadget majority Z00 > Z11";
    } else if (pg.z11 > pg.z00 && v.pin1 != Support::Yes) {
        v.pin1 = Support::Yes;
        v.pin1_why = "pair gadget majority Z11 > Z00";
    }
    if (pg.z00 == pg.z11 && pg.z00 > pg.z01) {
        v.equality = Support::Yes;
        v.equality_why = "pair gadget: Z00 = Z11 > Z01";
    }

    // Closure over conditioned single edges: pins and equality blocks may only
    // use properties already known to be supported.
    for (int round = 0; round < budget; ++round) {
        bool changed = false;
        int max_a = v.pin0 == Support::Yes ? k - 1 : 0;
        for (int a = 0; a <= max_a; ++a) {
            int max_b = v.pin1 == Support::Yes ? k - 1 - a : 0;
            for (int b = 0; b <= max_b; ++b) {
                int room = k - a - b;
                std::vector<std::vector<int>> block_choices = {{}};
                if (v.equality == Support::Yes) {
                    for (int t1 = 2; t1 <= room - 1; ++t1) {
                        block_choices.push_back({t1});
                        for (int t2 = t1; t1 + t2 <= room - 1; ++t2)
                            block_choices.push_back({t1, t2});
                    }
                }
                for (const auto& blocks : block_choices) {
                    int used = 0;
                    for (int t : blocks) used += t;
                    SlotConditioning sc{a, b, room - used, blocks};
                    if (sc.m < 1) continue;
                    if (cond_mass(f, sc, 0, sc.m) == 0) continue;  // inadmissible
                    // Single free vertex: strict marginal majority gives a pin.
                    Rat m0 = cond_mass(f, sc, 0, sc.m - 1);
                    Rat m1 = cond_mass(f, sc, 1, sc.m - 1);
                    if (m1 > m0 && v.pin1 != Support::Yes) {
                        v.pin1 = Support::Yes;
                        v.pin1_why = "conditioned single edge: spin-1 majority";
                        changed = true;
                    }
                    if (m0 > m1 && v.pin0 != Support::Yes) {
                        v.pin0 = Support::Yes;
                        v.pin0_why = "conditioned single edge: spin-0 majority";
                        changed = true;
                    }
                    // Whole free block balanced on the two all-equal outcomes.
                    if (sc.m >= 2 && v.equality != Support::Yes) {
                        Rat eq0 = cond_mass(f, sc, 0, 0);
                        Rat eq1 = cond_mass(f, sc, sc.m, 0);
                        Rat neq = cond_mass(f, sc, 0, sc.m) - eq0 - eq1;
                        if (eq0 == eq1 && eq0 > 0 && eq0 + eq1 > neq) {
                            v.equality = Support::Yes;
                            v.equality_why = "conditioned single edge: balanced equal-spin majority";
                            changed = true;
                        }
                    }
                }
            }
        }
        if (!changed) break;
    }
    return v;
}

ZbalTable zbal_table(const SymmetricFunction& f) {
    const int k = f.k;
    ZbalTable t;
    for (int tt = 1; tt <= k; ++tt) {
        Rat zp0 = 0, zpp0 = 0, zp1 = 0, zpp1 = 0;
        if (tt == k) {
            zp0 = f.w[0];
            zp1 = f.w[k];
        } else {
            for (int l = 0; l <= k - 1 - tt; ++l) {
                Rat c(binomial(k - 1 - tt, l));
                zp0 += c * f.w[l];
                zpp0 += c * f.w[l + tt];
                zp1 += c * f.w[l + 1];
                zpp1 += c * f.w[l + 1 + tt];
            }
        }
        t.zp0.push_back(zp0);
        t.zpp0.push_back(zpp0);
        t.zp1.push_back(zp1);
        t.zpp1.push_back(zpp1);
        t.z0.push_back(zp0 + zpp0);
        t.z1.push_back(zp1 + zpp1);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Polymorphisms

bool polymorphism_check(const SymmetricFunction& f, Polymorphism g) {
    if (!f.is_boolean()) throw PreconditionViolated("polymorphisms require Boolean weights");
    bool ternary = g == Polymorphism::Maj || g == Polymorphism::Minority;
    int cap = ternary ? 8 : 12;
    if (f.k > cap) throw CapExceeded(f.k, cap);

    std::vector<unsigned> sat;
    for (unsigned x = 0; x < (unsigned(1) << f.k); ++x)
        if (f.w[std::popcount(x)] == 1) sat.push_back(x);
    auto ok = [&](unsigned y) { return f.w[std::popcount(y)] == 1; };

    switch (g) {
        case Polymorphism::G0:
            return sat.empty() || ok(0);
        case Polymorphism::G1:
            return sat.empty() || ok((unsigned(1) << f.k) - 1);
        case Polymorphism::And:
            for (unsigned x : sat)
                for (unsigned y : sat)
                    if (!ok(x & y)) return false;
            return true;
        case Polymorphism::Or:
            for (unsigned x : sat)
                for (unsigned y : sat)
                    if (!ok(x | y)) return false;
            return true;
        case Polymorphism::Maj:
            for (unsigned x : sat)
                for (unsigned y : sat)
                    for (unsigned z : sat)
                        if (!ok((x & y) | (y & z) | (x & z))) return false;
            return true;
        case Polymorphism::Minority:
            for (unsigned x : sat)
                for (unsigned y : sat)
                    for (unsigned z : sat)
                        if (!ok(x ^ y ^ z)) return false;
            return true;
    }
    return false;
}

CspVerdict csp_decision_verdict(const SymmetricFunction& f) {
    // Minority first so affine relations report the affine witness even when
    // they also happen to contain the all-zero tuple.
    static constexpr Polymorphism order[] = {Polymorphism::Minority, Polymorphism::G0,
                                             Polymorphism::G1,       Polymorphism::And,
                                             Polymorphism::Or,       Polymorphism::Maj};
    for (Polymorphism g : order)
        if (polymorphism_check(f, g)) return {true, g};
    return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// Case trichotomy

ClassificationReport case_trichotomy(const SymmetricFunction& f) {
    if (!f.is_boolean())
        throw PreconditionViolated("case trichotomy requires Boolean weights");
    ClassificationReport r;
    r.easy = detect_easy(f);
    r.self_dual = f.is_self_dual();
    for (int l = 1; l <= f.k; ++l)
        if (f.w[l] == 1) {
            r.first_one_index = l;
            break;
        }
    if (r.easy) {
        r.tag = CaseTag::Easy;
        return r;
    }
    r.support = support_verdict(f);
    if (r.self_dual) {
        r.tag = f.w[0] == 0 ? CaseTag::CaseII_w0_zero : CaseTag::CaseII_w0_one;
        return r;
    }
    Support p0 = r.support.pin0, p1 = r.support.pin1;
    if (p0 == Support::Yes && p1 == Support::Yes)
        r.tag = CaseTag::CaseI;
    else if (p0 == Support::Yes && p1 == Support::No)
        r.tag = CaseTag::CaseIII_pin0;
    else if (p1 == Support::Yes && p0 == Support::No)
        r.tag = CaseTag::CaseIII_pin1;
    else
        throw Undetermined("pin support left unknown within search budget");
    return r;
}

}  // namespace spinlab

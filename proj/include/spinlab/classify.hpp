#pragma once

#include <optional>
#include <string>

#include "spinlab/spin_core.hpp"

namespace spinlab {

enum class EasyName { Zero, One, AllZero, AllOne, Eq, Even, Odd };
const char* easy_name(EasyName e);

std::optional<EasyName> detect_easy(const SymmetricFunction& f);
bool is_self_dual(const SymmetricFunction& f);

// Two hyperedges sharing k-1 vertices, conditioned on the two private
// vertices: Z[s1][s2] = sum_l C(k-1,l) w[l+s1] w[l+s2].
struct PairGadgetTable {
    Rat z00, z01, z11;  // z10 == z01 by symmetry
};
PairGadgetTable pair_gadget(const SymmetricFunction& f);

enum class Support { Yes, No, Unknown };
const char* support_name(Support s);

struct SupportVerdict {
    Support pin0 = Support::Unknown;
    Support pin1 = Support::Unknown;
    Support equality = Support::Unknown;
    std::string pin0_why, pin1_why, equality_why;
};
SupportVerdict support_verdict(const SymmetricFunction& f, int budget = 3);

// Balance system whose solution space is exactly the palindromic weight
// vectors; one row per t = 1..k (index 0 of each vector holds t=1).
struct ZbalTable {
    std::vector<Rat> zp0, zpp0, zp1, zpp1, z0, z1;
};
ZbalTable zbal_table(const SymmetricFunction& f);

enum class Polymorphism { Minority, G0, G1, And, Or, Maj };
const char* polymorphism_name(Polymorphism g);

bool polymorphism_check(const SymmetricFunction& f, Polymorphism g);

struct CspVerdict {
    bool tractable = false;
    std::optional<Polymorphism> witness;
};
CspVerdict csp_decision_verdict(const SymmetricFunction& f);

enum class CaseTag { Easy, CaseI, CaseII_w0_zero, CaseII_w0_one, CaseIII_pin0, CaseIII_pin1 };
const char* case_name(CaseTag c);

struct ClassificationReport {
    std::optional<EasyName> easy;
    bool self_dual = false;
    SupportVerdict support;
    CaseTag tag = CaseTag::Easy;
    std::optional<int> first_one_index;  // smallest positive l with w[l] == 1
};
ClassificationReport case_trichotomy(const SymmetricFunction& f);

}  // namespace spinlab

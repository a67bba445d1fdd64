#pragma once

#include <stdexcept>
#include <string>

namespace spinlab {

// Exit-code conventions used by the CLI:
//   2 = parse error, 3 = enumeration cap exceeded,
//   4 = precondition / verdict refusal, 5 = internal inconsistency.
struct SpinError : std::runtime_error {
    int exit_code;
    SpinError(std::string msg, int code) : std::runtime_error(std::move(msg)), exit_code(code) {}
};

struct ParseError : SpinError {
    explicit ParseError(const std::string& m) : SpinError("parse error: " + m, 2) {}
};
struct CapExceeded : SpinError {
    int needed;
    CapExceeded(int need, int cap)
        : SpinError("enumeration cap exceeded: need " + std::to_string(need) +
                        " free variables, cap is " + std::to_string(cap),
                    3),
          needed(need) {}
};
struct PreconditionViolated : SpinError {
    explicit PreconditionViolated(const std::string& m) : SpinError(m, 4) {}
};
struct ArityMismatch : PreconditionViolated {
    explicit ArityMismatch(const std::string& m) : PreconditionViolated("arity mismatch: " + m) {}
};
struct NotAdmissible : PreconditionViolated {
    NotAdmissible() : PreconditionViolated("conditioning event has probability 0") {}
};
struct NotEasy : PreconditionViolated {
    NotEasy() : PreconditionViolated("function is not one of the seven easy patterns") {}
};
struct NoMajority : PreconditionViolated {
    explicit NoMajority(const std::string& m) : PreconditionViolated("no strict majority: " + m) {}
};
struct NotAntiferro : PreconditionViolated {
    NotAntiferro() : PreconditionViolated("system is not antiferromagnetic (beta*gamma >= 1)") {}
};
struct NoInterval : PreconditionViolated {
    NoInterval() : PreconditionViolated("discriminant condition fails: no critical interval") {}
};
struct AccuracyInsufficient : PreconditionViolated {
    explicit AccuracyInsufficient(const std::string& m)
        : PreconditionViolated("gadget accuracy insufficient: " + m) {}
};
struct ZeroOffDiagonal : PreconditionViolated {
    ZeroOffDiagonal() : PreconditionViolated("off-diagonal pair mass is zero") {}
};
struct NotRegular : PreconditionViolated {
    explicit NotRegular(const std::string& m) : PreconditionViolated("graph not regular: " + m) {}
};
struct BadGadget : PreconditionViolated {
    explicit BadGadget(const std::string& m) : PreconditionViolated("bad gadget: " + m) {}
};
struct NoWitnessInBudget : PreconditionViolated {
    explicit NoWitnessInBudget(const std::string& m)
        : PreconditionViolated("no hardness witness within search budget: " + m) {}
};
struct Undetermined : PreconditionViolated {
    explicit Undetermined(const std::string& m)
        : PreconditionViolated("classification undetermined: " + m) {}
};

struct InternalInconsistency : SpinError {
    explicit InternalInconsistency(const std::string& m)
        : SpinError("internal inconsistency: " + m, 5) {}
};
struct InconsistentCriteria : InternalInconsistency {
    explicit InconsistentCriteria(const std::string& m)
        : InternalInconsistency("uniqueness criteria disagree: " + m) {}
};

}  // namespace spinlab

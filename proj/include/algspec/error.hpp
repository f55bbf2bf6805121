#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace algspec {

enum class Errc {
    DivisionByZero,
    FieldMismatch,
    NotSquare,
    SizeMismatch,
    ZeroPolynomial,
    NotSquarefreeReducible,
    NotMonic,
    ZeroLambda,
    EmptyFamily,
    EmptySampleSet,
    InvalidFamily,
    ProductsNotInIdeal,
    NonRegular,
    DegreeExceedsWeight,
    NotFound,
    DomainTooLarge,
    NotSpectrallyDisjoint,
    NotCommuting,
    NotAFactorization,
    ZeroQuaternion,
    InconsistentSidedness,
    InternalContradiction,
    ParseError,
    InvariantViolation,
    PreconditionViolation,
    Unsupported,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Postcondition self-checks. Every certification executed anywhere in the
// library bumps a global counter so callers (CLI, tests) can prove that
// reported "certified" lines correspond to checks that actually ran.
std::uint64_t certification_count();
void certify(bool ok, const char* what);

}  // namespace algspec

#ifndef GHULL_ERRORS_HPP
#define GHULL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghull {

enum class Errc {
    // fields
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    FieldMismatch,
    NotASubfield,
    DivisionByZero,
    // linear algebra
    AmbientMismatch,
    NotSquare,
    Singular,
    // codes
    SOutOfRange,
    LengthMismatch,
    ZeroCode,
    RequiresExactDistance,
    NotLCD,
    InternalInvariantViolation,
    // constructions
    RootOrderMismatch,
    EvenExponent,
    NotClosedUnderFrobenius,
    CoefficientsNotInBaseField,
    NotABasis,
    SearchBudgetExceeded,
    NotFRR,
    GramNotDiagonal,
    // families
    PreconditionViolated,
    BranchAmbiguous,
    // cli / persistence
    RecipeInvalid,
    CatalogCorrupt,
};

const char* errc_name(Errc c) noexcept;

/// All library failures throw this; `code()` identifies the contract that was violated.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ghull

#endif

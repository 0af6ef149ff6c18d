#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ffgcd/bigint.hpp"

namespace ffgcd {

// Domain error kinds. The CLI prints the name of the kind on stderr.
enum class Errc {
    NonPrime,
    DegreeZero,
    CardinalityLimitExceeded,
    MixedContexts,
    DivisionByZero,
    ZeroElement,
    IncompatibleCharacteristic,
    NotASubfield,
    BothZero,
    ZeroInput,
    ConstantModulus,
    DegreeCapExceeded,
    ContextMismatch,
    SyntaxError,
    CoefficientOutOfRange,
    EnumerationCapExceeded,
    NotCoprime,
    RNotDividingQMinus1,
    NotIrreducible,
    EvenR,
    NotMonic,
    Constant,
    N0NotReduced,
    NotAPrimePower,
    InfeasiblePlan,
    MultiplicativelyDependent,
    BudgetExceeded,
    InvalidArgument,
    InternalError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Error(Errc code, const std::string& what, BigInt required_degree)
        : std::runtime_error(what), code_(code), required_degree_(std::move(required_degree)) {}

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

    // Set for DegreeCapExceeded so callers can fall back to witness mode.
    const std::optional<BigInt>& required_degree() const noexcept { return required_degree_; }

   private:
    Errc code_;
    std::optional<BigInt> required_degree_;
};

}  // namespace ffgcd

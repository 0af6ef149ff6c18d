#include "ffgcd/error.hpp"

namespace ffgcd {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::DegreeZero: return "DegreeZero";
        case Errc::CardinalityLimitExceeded: return "CardinalityLimitExceeded";
        case Errc::MixedContexts: return "MixedContexts";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::IncompatibleCharacteristic: return "IncompatibleCharacteristic";
        case Errc::NotASubfield: return "NotASubfield";
        case Errc::BothZero: return "BothZero";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::ConstantModulus: return "ConstantModulus";
        case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
        case Errc::ContextMismatch: return "ContextMismatch";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::CoefficientOutOfRange: return "CoefficientOutOfRange";
        case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::RNotDividingQMinus1: return "RNotDividingQMinus1";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::EvenR: return "EvenR";
        case Errc::NotMonic: return "NotMonic";
        case Errc::Constant: return "Constant";
        case Errc::N0NotReduced: return "N0NotReduced";
        case Errc::NotAPrimePower: return "NotAPrimePower";
        case Errc::InfeasiblePlan: return "InfeasiblePlan";
        case Errc::MultiplicativelyDependent: return "MultiplicativelyDependent";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InternalError: return "InternalError";
    }
    return "Unknown";
}

}  // namespace ffgcd

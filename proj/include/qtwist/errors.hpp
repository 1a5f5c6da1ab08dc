#pragma once

// Error types thrown by the library.  Every throw site names the violated
// guard in the message so reports and test logs can surface it verbatim.

#include <stdexcept>
#include <string>

namespace qtwist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact scalar layer
struct DivisionByZero : Error { using Error::Error; };
struct PoleAtPoint : Error { using Error::Error; };

// truncated series
struct VariableMismatch : Error { using Error::Error; };
struct NonUnitConstantTerm : Error { using Error::Error; };
struct NonStabilizingFactor : Error { using Error::Error; };

// tensor algebra
struct RankMismatch : Error { using Error::Error; };
struct SlotOutOfRange : Error { using Error::Error; };

// numeric kernels
struct NonConvergent : Error { using Error::Error; };
struct PoleAtNonpositive : Error { using Error::Error; };
struct PoleInC : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// check registry / CLI
struct UnknownCheck : Error { using Error::Error; };
struct UnknownMatrix : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct ConfigParseError : Error { using Error::Error; };

}  // namespace qtwist

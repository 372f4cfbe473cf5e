#pragma once

#include <stdexcept>
#include <string>

namespace vtspec {

// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange final : Error { using Error::Error; };
struct ZeroMultiplicity final : Error { using Error::Error; };
struct NotRegular final : Error { using Error::Error; };
struct EmptySet final : Error { using Error::Error; };
struct Disconnected final : Error { using Error::Error; };
struct ConvergenceFailure final : Error { using Error::Error; };
struct TooLarge final : Error { using Error::Error; };
struct NotTransitive final : Error { using Error::Error; };
struct InconsistentOrder final : Error { using Error::Error; };
struct NotSymmetricSet final : Error { using Error::Error; };
struct MatchingFailure final : Error { using Error::Error; };
struct NotAutomorphism final : Error { using Error::Error; };
struct NoIndex final : Error { using Error::Error; };
struct NonPositiveEpsilon final : Error { using Error::Error; };
struct OutOfRange final : Error { using Error::Error; };
struct NotApplicable final : Error { using Error::Error; };
struct ParseError final : Error { using Error::Error; };

}  // namespace vtspec

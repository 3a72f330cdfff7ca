#include <drc/error.hpp>

namespace drc {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NonPositiveLogArgument: return "NonPositiveLogArgument";
    case ErrorKind::NonPositiveDenominator: return "NonPositiveDenominator";
    case ErrorKind::NonMonotoneLatencies: return "NonMonotoneLatencies";
    case ErrorKind::InvalidConfidence: return "InvalidConfidence";
    case ErrorKind::EmptySampleSet: return "EmptySampleSet";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::CountExceedsN: return "CountExceedsN";
    case ErrorKind::GridTooLarge: return "GridTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

ErrorCategory category_of(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::InvalidConfidence:
    case ErrorKind::InvalidArgument:
    case ErrorKind::GridTooLarge:
        return ErrorCategory::Config;
    case ErrorKind::EmptySampleSet:
    case ErrorKind::SizeMismatch:
    case ErrorKind::CountExceedsN:
    case ErrorKind::IoError:
    case ErrorKind::NonMonotoneLatencies:
        return ErrorCategory::Data;
    case ErrorKind::NonPositiveLogArgument:
    case ErrorKind::NonPositiveDenominator:
        return ErrorCategory::Numeric;
    }
    return ErrorCategory::Numeric;
}

Error::Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what)
    , kind_(kind)
    , index_(index)
{
}

} // namespace drc

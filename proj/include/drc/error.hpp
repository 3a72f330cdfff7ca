#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace drc {

enum class ErrorKind {
    NonPositiveLogArgument,
    NonPositiveDenominator,
    NonMonotoneLatencies,
    InvalidConfidence,
    EmptySampleSet,
    SizeMismatch,
    CountExceedsN,
    GridTooLarge,
    InvalidArgument,
    ParseError,
    ValidationError,
    IoError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Broad failure class, used by the CLI to pick an exit status.
enum class ErrorCategory { Config, Data, Numeric };

ErrorCategory category_of(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }

    /// Offending element (sample index, type index) or, for parse errors, the 1-based line number.
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

} // namespace drc

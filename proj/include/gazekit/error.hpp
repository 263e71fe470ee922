#ifndef GAZEKIT_ERROR_HPP
#define GAZEKIT_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gazekit {

/// Every failure mode the toolkit reports. Each maps to exactly one
/// library precondition or I/O condition; the CLI maps codes to exit codes.
enum class ErrorCode {
    FileNotFound,
    MalformedRow,
    NonMonotonicTimestamp,
    EmptySeries,
    UnknownLabelToken,
    MissingLabelColumn,
    SeriesTooShort,
    NonPositiveThreshold,
    NonPositiveConversion,
    IndexOutOfRange,
    LengthMismatch,
    ZeroVariance,
    AllUndefined,
    InvalidGrid,
    InvalidConfig,
    NonFiniteValue,
    InfeasibleAmplitude,
    IoError,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::FileNotFound: return "FileNotFound";
        case ErrorCode::MalformedRow: return "MalformedRow";
        case ErrorCode::NonMonotonicTimestamp: return "NonMonotonicTimestamp";
        case ErrorCode::EmptySeries: return "EmptySeries";
        case ErrorCode::UnknownLabelToken: return "UnknownLabelToken";
        case ErrorCode::MissingLabelColumn: return "MissingLabelColumn";
        case ErrorCode::SeriesTooShort: return "SeriesTooShort";
        case ErrorCode::NonPositiveThreshold: return "NonPositiveThreshold";
        case ErrorCode::NonPositiveConversion: return "NonPositiveConversion";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::AllUndefined: return "AllUndefined";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::InfeasibleAmplitude: return "InfeasibleAmplitude";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

/// Toolkit exception: an ErrorCode plus a human-readable message, with an
/// optional 1-based source line number for ingestion failures.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code) {}

    Error(ErrorCode code, const std::string& message, std::size_t line)
        : std::runtime_error(std::string(to_string(code)) + ": " + message +
                             " (line " + std::to_string(line) + ")"),
          code_(code), line_(line) {}

    ErrorCode code() const noexcept { return code_; }

    /// 1-based line number of the offending input row, when applicable.
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
};

}  // namespace gazekit

#endif  // GAZEKIT_ERROR_HPP

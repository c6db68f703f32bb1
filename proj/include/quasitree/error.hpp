#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quasitree {

enum class ErrorKind {
    SelfLoop,
    VertexOutOfRange,
    TooLarge,
    InvalidDecomposition,
    NotClean,
    SearchCapExceeded,
    PreconditionViolation,
    PatternPresent,
    ListsTooSmall,
    HeavyCapViolated,
    UnknownFamily,
    BadParams,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. `kind()` is stable and is what
/// the CLI maps onto exit codes and structured error output.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace quasitree

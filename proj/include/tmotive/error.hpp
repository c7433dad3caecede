#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmotive {

// Byte/line/column extent of a token or form in a DSL source text.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

// Errors raised while reading DSL text. Exit code 2 at the CLI.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, SourceSpan span)
        : std::runtime_error(std::move(message)), span_(span) {}

    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

// Errors raised by the algebra on well-formed input. Exit code 1 at the CLI.
class DomainError : public std::runtime_error {
public:
    enum class Kind {
        ZeroDivision,
        GradeMismatch,
        InvalidBlowupCoordinate,
        OverlappingPieces,
        EmptyInterval,
        NonDefinableEndpoint,
        InvalidArgument,
    };

    DomainError(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void throw_zero_division(const std::string& what) {
    throw DomainError(DomainError::Kind::ZeroDivision, "ZeroDivision: " + what);
}

}  // namespace tmotive

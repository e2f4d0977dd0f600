#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bdom
{
    enum class ErrorKind
    {
        invalid_input,
        pair_coverage_violation,
        block_size_violation,
        trivial_design,
        not_symmetric,
        degenerate_residual,
        degenerate_derived,
        not_prime,
        bad_order,
        difference_coverage_violation,
        not_steiner,
        not_sts,
        girth_too_small,
        inconsistent_tau_beta,
        instance_too_large,
        budget_exceeded,
        incomplete_enumeration,
        invalid_configuration,
        syntax_error
    };

    auto to_string(ErrorKind kind) -> std::string_view;

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string & message) :
            std::runtime_error(message),
            _kind(kind)
        {
        }

        [[nodiscard]] auto kind() const noexcept -> ErrorKind { return _kind; }

    private:
        ErrorKind _kind;
    };

    /// Raised by design validation. When the failure is a pair-coverage
    /// violation, the offending pair (0-based) and its observed count are kept.
    class ValidationError : public Error
    {
    public:
        ValidationError(ErrorKind kind, const std::string & message,
            std::optional<std::pair<int, int>> pair = std::nullopt, int count = 0) :
            Error(kind, message),
            _pair(pair),
            _count(count)
        {
        }

        [[nodiscard]] auto pair() const noexcept -> std::optional<std::pair<int, int>> { return _pair; }
        [[nodiscard]] auto count() const noexcept -> int { return _count; }

    private:
        std::optional<std::pair<int, int>> _pair;
        int _count;
    };

    /// Parse failure with a 1-based line and column.
    class SyntaxError : public Error
    {
    public:
        SyntaxError(const std::string & message, int line, int column) :
            Error(ErrorKind::syntax_error,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
            _line(line),
            _column(column)
        {
        }

        [[nodiscard]] auto line() const noexcept -> int { return _line; }
        [[nodiscard]] auto column() const noexcept -> int { return _column; }

    private:
        int _line;
        int _column;
    };
}

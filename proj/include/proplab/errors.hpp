#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proplab
{
    /// Base of every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A physical quantity that must be positive (or otherwise well defined) is not.
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    /// A parameter lies outside a model's validity window in strict mode.
    class RangeError : public Error
    {
    public:
        RangeError(std::string parameter, const std::string& message)
            : Error(message)
            , parameter_(std::move(parameter))
        {
        }

        const std::string& parameter() const noexcept
        {
            return parameter_;
        }

    private:
        std::string parameter_;
    };

    class ParseError : public Error
    {
    public:
        ParseError(std::size_t line, const std::string& message)
            : Error("line " + std::to_string(line) + ": " + message)
            , line_(line)
        {
        }

        std::size_t line() const noexcept
        {
            return line_;
        }

    private:
        std::size_t line_;
    };

    /// Structurally valid input that violates a documented invariant.
    class ValidationError : public Error
    {
    public:
        using Error::Error;
    };

    /// Link-budget inversion found no distance inside the model's window under the budget.
    class NoCoverageError : public Error
    {
    public:
        using Error::Error;
    };
}

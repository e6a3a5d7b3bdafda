#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcol
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed text input (edge lists, list files, DIMACS, DOT). `line` is 1-based, 0 if unknown.
    class FormatError : public Error
    {
        private:
            std::size_t _line;

        public:
            FormatError(std::size_t line, const std::string & message);

            auto line() const -> std::size_t
            {
                return _line;
            }
    };

    /// An argument that breaks a documented contract (non-total coloring, list colors outside H, ...).
    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    /// An input the chosen algorithm does not accept (degree bounds, size caps).
    class PreconditionError : public Error
    {
        public:
            using Error::Error;
    };
}

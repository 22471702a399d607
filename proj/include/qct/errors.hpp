#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qct
{

    // Malformed textual input (circuit, canonical form, channel form, matrix file).
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string &msg, std::size_t offset)
            : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"),
              _offset(offset)
        {
        }

        std::size_t offset() const noexcept { return _offset; }

    private:
        std::size_t _offset;
    };

    // Mathematically invalid input: non-unitary matrix, entries outside the
    // expected ring, residue patterns that belong to no Clifford+T operator.
    class DomainError : public std::domain_error
    {
    public:
        explicit DomainError(const std::string &msg) : std::domain_error(msg) {}
    };

    // A generated table failed one of its construction-time assertions.
    class InternalError : public std::logic_error
    {
    public:
        explicit InternalError(const std::string &msg) : std::logic_error(msg) {}
    };

} // namespace qct

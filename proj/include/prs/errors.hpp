#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prs
{
    /// Graph would exceed the supported vertex count.
    class CapacityError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// An operation was called outside its documented domain.
    class PreconditionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Colouring length does not match the edge count of its graph.
    class ShapeError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A search or enumeration ran out of budget. `partial` carries how far it got.
    class BudgetError : public std::runtime_error
    {
    public:
        BudgetError(const std::string & what, std::uint64_t partial) :
            std::runtime_error(what),
            partial(partial)
        {
        }

        std::uint64_t partial;
    };

    /// Malformed textual input; `offset` is the byte position of the problem.
    class FormatError : public std::runtime_error
    {
    public:
        FormatError(const std::string & what, std::size_t offset) :
            std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
            offset(offset)
        {
        }

        std::size_t offset;
    };
}

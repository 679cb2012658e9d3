#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace regdec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad rank, malformed partition, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The request is well-formed but exceeds a hard capacity of the implementation.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A search ran out of its configured node budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t budget, std::uint64_t visited)
        : Error("node budget of " + std::to_string(budget) + " exceeded after " +
                std::to_string(visited) + " visited nodes"),
          budget_(budget),
          visited_(visited) {}

    std::uint64_t budget() const noexcept { return budget_; }
    std::uint64_t visited() const noexcept { return visited_; }

private:
    std::uint64_t budget_;
    std::uint64_t visited_;
};

}  // namespace regdec

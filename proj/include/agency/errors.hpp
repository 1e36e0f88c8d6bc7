#pragma once

#include <stdexcept>
#include <string>

namespace agency {

// Base for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input data: unreadable files, malformed rows, schema mismatches.
class LoadError : public Error {
public:
    using Error::Error;
};

// A value or call that violates an operation's contract.
class ContractError : public Error {
public:
    using Error::Error;
};

// Search exceeded its configured node cap.
class BudgetError : public Error {
public:
    BudgetError(const std::string& msg, std::size_t nodes, int depth_reached)
        : Error(msg), nodes(nodes), depth_reached(depth_reached) {}
    std::size_t nodes;
    int depth_reached;
};

}  // namespace agency

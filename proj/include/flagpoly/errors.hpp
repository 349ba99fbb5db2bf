#pragma once

#include <stdexcept>
#include <string>

namespace flagpoly {

enum class ErrorKind {
    BadInput,            // malformed arguments, files, JSON
    InvalidDiagonal,
    InvalidRank,
    SimplicityViolation, // a maximal clique has the wrong size
    NotPalindromic,
    NotAClique,
    NotAdjacent,
    NotAMember,
    FullSet,
    InvalidBuildingSet,
    NotFlag,
    Disconnected,
    DimensionMismatch,
    StepBudget,          // search node/time budget exhausted
    SearchFailed,
    Overflow,            // checked integer arithmetic overflowed
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace flagpoly

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace topolift {

/// Malformed input file or config (carries "path:line" location when known).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Caller mistake: unknown lifting id, source-kind mismatch, parameter outside
/// its declared constraint, bad flag combination.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Data-dependent failure: the input is structurally valid but unsuitable for
/// the requested operation (collinear points, disconnected graph, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A loaded object violates its type invariants; `report` holds one line per
/// violation, as produced by validate().
class ValidationError : public DomainError {
public:
    ValidationError(const std::string& what, std::vector<std::string> report)
        : DomainError(what), report(std::move(report)) {}

    std::vector<std::string> report;
};

} // namespace topolift

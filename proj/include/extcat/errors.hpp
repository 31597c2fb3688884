#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extcat {

/// Predicted work exceeds a configured enumeration cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Composition or application with incompatible domain/codomain.
struct DomainMismatch : std::logic_error {
    explicit DomainMismatch(const std::string& what) : std::logic_error(what) {}
};

/// An object falls outside the supported subcategory (end terms must be
/// uniserial or zero, deciders restrict further).
struct ScopeViolation : std::invalid_argument {
    explicit ScopeViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// A proved statement failed on a concrete instance. Always a build-stopping
/// defect in this code, never an acceptable runtime outcome.
struct TheoremViolation : std::logic_error {
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// Class equality failed to be transitive on a tested triple.
struct NonTransitive : TheoremViolation {
    explicit NonTransitive(const std::string& what) : TheoremViolation(what) {}
};

struct UnknownVertex : std::invalid_argument {
    explicit UnknownVertex(const std::string& what) : std::invalid_argument(what) {}
};

/// Input file parse failure, with 1-based location.
struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what),
          line(line_), column(column_) {}
};

} // namespace extcat

#ifndef HSURF_ERRORS_HPP
#define HSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsurf {

// All library errors derive from Error and carry a stable numeric code so
// front-ends can map each failure class to a distinct exit status.
class Error : public std::runtime_error {
public:
    Error(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

// Field or variable-count mismatch between operands.
struct MismatchError : Error {
    explicit MismatchError(const std::string& what) : Error(10, what) {}
};

// Bad field parameters: composite modulus, p = 2, modulus out of range.
struct FieldError : Error {
    explicit FieldError(const std::string& what) : Error(11, what) {}
};

// Homogeneity required but absent (or degrees inconsistent).
struct HomogeneityError : Error {
    explicit HomogeneityError(const std::string& what) : Error(12, what) {}
};

// Division by zero: zero divisor polynomial, zero denominator, non-invertible element.
struct DivisionError : Error {
    explicit DivisionError(const std::string& what) : Error(13, what) {}
};

// Variable or coordinate index out of bounds.
struct IndexError : Error {
    explicit IndexError(const std::string& what) : Error(14, what) {}
};

// Affine/projective chart misuse or chart mismatch between objects.
struct ChartError : Error {
    explicit ChartError(const std::string& what) : Error(15, what) {}
};

// Geometric precondition violated: point not on hypersurface, singular point,
// center on the target hyperplane, plane not contained, degenerate tensor, ...
struct GeometryError : Error {
    explicit GeometryError(const std::string& what) : Error(16, what) {}
};

// Operation unavailable over the given field (sampling over Q, missing roots of -1).
struct UnsupportedFieldError : Error {
    explicit UnsupportedFieldError(const std::string& what) : Error(17, what) {}
};

// Text input rejected; carries 1-based line/column of the offending token.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(18, what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Composition lands entirely in the locus where the outer map is undefined.
struct CompositionError : Error {
    explicit CompositionError(const std::string& what) : Error(19, what) {}
};

} // namespace hsurf

#endif

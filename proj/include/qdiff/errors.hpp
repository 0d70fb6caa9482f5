#pragma once

#include <stdexcept>
#include <string>

namespace qdiff {

/// Base class for all errors thrown by this library.
class QdiffError : public std::runtime_error {
public:
    explicit QdiffError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division by the zero polynomial / inversion of the zero coefficient.
class ZeroDenominator : public QdiffError {
public:
    explicit ZeroDenominator(const std::string& msg) : QdiffError(msg) {}
};

/// Evaluation at q = 1 hit a denominator that vanishes there.
class PoleAtOne : public QdiffError {
public:
    explicit PoleAtOne(const std::string& msg) : QdiffError(msg) {}
};

/// poisson_scale was applied to a coefficient that does not vanish at q = 1.
class NotVanishingAtOne : public QdiffError {
public:
    explicit NotVanishingAtOne(const std::string& msg) : QdiffError(msg) {}
};

/// Two words of different length were compared, or a degree-mixed element was
/// used where a homogeneous one is required.
class DegreeMismatch : public QdiffError {
public:
    explicit DegreeMismatch(const std::string& msg) : QdiffError(msg) {}
};

/// A tensor-slot position lies outside the valid range for the given degree.
class PositionOutOfRange : public QdiffError {
public:
    explicit PositionOutOfRange(const std::string& msg) : QdiffError(msg) {}
};

/// Iterating the averaging operator failed to reach a fixpoint within the
/// dimension bound of the ambient graded component.
class NoConvergence : public QdiffError {
public:
    explicit NoConvergence(const std::string& msg) : QdiffError(msg) {}
};

/// A computation would exceed the configured degree / size budget.
class DegreeBudgetExceeded : public QdiffError {
public:
    explicit DegreeBudgetExceeded(const std::string& msg) : QdiffError(msg) {}
};

/// An exact linear system that must be solvable for valid input was singular.
class SingularSystem : public QdiffError {
public:
    explicit SingularSystem(const std::string& msg) : QdiffError(msg) {}
};

/// The dual pairing matrix admits no basis in which every defining relation of
/// the dual algebra has a pure q-power coefficient.
class NotQuasipolynomial : public QdiffError {
public:
    explicit NotQuasipolynomial(const std::string& msg) : QdiffError(msg) {}
};

/// An operation specific to one concrete algebra was invoked on another.
class WrongAlgebra : public QdiffError {
public:
    explicit WrongAlgebra(const std::string& msg) : QdiffError(msg) {}
};

/// Text input (coefficients, elements, or `.qalg` files) failed to parse.
/// Carries the 1-based line and column of the offending character.
class ParseError : public QdiffError {
public:
    ParseError(const std::string& msg, int line, int col)
        : QdiffError(msg + " (line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ")"),
          raw_(msg),
          line_(line),
          col_(col) {}

    /// The message without the position suffix.
    const std::string& raw_message() const { return raw_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string raw_;
    int line_;
    int col_;
};

/// A `.qalg` presentation left some pair i > j without a relation.
class MissingRelation : public QdiffError {
public:
    explicit MissingRelation(const std::string& msg) : QdiffError(msg) {}
};

/// A symmetrization-dependent operation was invoked on a presentation whose
/// tails are not homogeneous of degree 2.
class InhomogeneousAlgebra : public QdiffError {
public:
    explicit InhomogeneousAlgebra(const std::string& msg) : QdiffError(msg) {}
};

} // namespace qdiff

#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "qdiff/qcoeff.hpp"

namespace Eigen {

template <>
struct NumTraits<qdiff::QCoeff> {
    using Self = qdiff::QCoeff;
    using Real = Self;
    using NonInteger = Self;
    using Nested = Self;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 64,
    };
    static inline Self epsilon() { return Self::zero(); }
    static inline Self dummy_precision() { return Self::zero(); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace qdiff {

/// Dense exact matrix / column vector over the coefficient field.
using QMatrix = Eigen::Matrix<QCoeff, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<QCoeff, Eigen::Dynamic, 1>;

/// Entrywise equality (Eigen's comparison operators are elementwise
/// expressions, so spell the predicate out).
bool matrices_equal(const QMatrix& a, const QMatrix& b);

/// Rank over the field of coefficients, by fraction-exact Gauss-Jordan
/// elimination with smallest-entry pivoting.
long exact_rank(QMatrix m);

/// Basis of the right kernel of m, one column per basis vector (zero
/// columns when the kernel is trivial).
QMatrix exact_kernel(QMatrix m);

/// Some exact solution of m x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<QVector> exact_solve_any(QMatrix m, const QVector& b);

/// Rank of the rational specialization at q = q0 — a certified lower bound
/// for the exact rank (specializing can only collapse, never create, linear
/// independence).  Throws ZeroDenominator when an entry has a pole at q0.
long rank_at(const QMatrix& m, const Rational& q0);

} // namespace qdiff

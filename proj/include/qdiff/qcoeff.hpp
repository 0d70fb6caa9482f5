#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qdiff/errors.hpp"

namespace qdiff {

/// Exact rational number with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

/// Laurent polynomial in q over the rationals: exponent -> coefficient.
/// Entries with zero coefficient are never stored.
using LaurentPoly = std::map<long, Rational>;

/// Exact scalar in the quantum parameter q: a quotient of Laurent polynomials
/// kept in canonical form.
///
/// Canonical form: the denominator is an ordinary polynomial in q that is
/// monic, has nonzero constant term, and shares no polynomial factor with the
/// numerator; any net power of q is carried by the numerator.  Zero is the
/// empty numerator over denominator 1.  Equality of canonical forms is
/// structural equality.
class QCoeff {
public:
    /// Zero.
    QCoeff();
    /// The constant v (explicit so that plain integers never convert
    /// silently in mixed arithmetic).
    explicit QCoeff(long v);

    static QCoeff zero();
    static QCoeff one();
    /// The constant r.
    static QCoeff from_rational(const Rational& r);
    /// q^e.
    static QCoeff q_power(long e);
    /// r * q^e.
    static QCoeff monomial(const Rational& r, long e);
    /// Canonicalize a Laurent polynomial.
    static QCoeff from_laurent(const LaurentPoly& numerator);
    /// Canonicalize numerator / denominator; throws ZeroDenominator if the
    /// denominator is the zero polynomial.
    static QCoeff quotient(const LaurentPoly& numerator,
                           const LaurentPoly& denominator);

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    /// The value as a plain rational if the denominator is 1 and the
    /// numerator is constant.
    std::optional<Rational> as_rational() const;
    /// The exponent e if the value is exactly q^e.
    std::optional<long> as_q_power() const;
    /// (r, e) if the value is a single Laurent term r * q^e.
    std::optional<std::pair<Rational, long>> as_monomial() const;

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }

    QCoeff operator+(const QCoeff& o) const;
    QCoeff operator-(const QCoeff& o) const;
    QCoeff operator*(const QCoeff& o) const;
    /// Division; throws ZeroDenominator if o is zero.
    QCoeff operator/(const QCoeff& o) const;
    QCoeff operator-() const;
    QCoeff& operator+=(const QCoeff& o);
    QCoeff& operator-=(const QCoeff& o);
    QCoeff& operator*=(const QCoeff& o);

    /// Multiplicative inverse; throws ZeroDenominator on zero.
    QCoeff inverse() const;

    bool operator==(const QCoeff& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const QCoeff& o) const { return !(*this == o); }
    /// Arbitrary strict total order (for use as a map key).
    bool operator<(const QCoeff& o) const;

    /// Exact value at q = 1; throws PoleAtOne if the reduced denominator
    /// vanishes there.
    Rational eval_at_one() const;
    /// Exact value at q = r (display convenience); throws ZeroDenominator if
    /// the denominator vanishes at r, or if r = 0 and the numerator has
    /// negative powers of q.
    Rational eval_at(const Rational& r) const;
    /// This value divided by (q - 1), defined when eval_at_one() = 0; throws
    /// NotVanishingAtOne otherwise.
    QCoeff poisson_scale() const;

    /// Display form, e.g. "1q^1-1q^-1", "3/2q^0", "(1q^0)/(1q^1+1q^0)".
    std::string str() const;
    /// Parse the display grammar; throws ParseError with position info.
    static QCoeff parse(const std::string& text);
    /// Parse a coefficient starting at the cursor, consuming as many summands
    /// as the grammar allows, and leave the cursor just past it.  Used by
    /// parsers of larger grammars that embed coefficients.
    static QCoeff parse_prefix(class TextCursor& cur);

private:
    QCoeff(LaurentPoly num, LaurentPoly den)
        : num_(std::move(num)), den_(std::move(den)) {}

    /// Bring an arbitrary numerator / denominator pair to canonical form.
    static QCoeff make_canonical(LaurentPoly num, LaurentPoly den);

    LaurentPoly num_; // Laurent polynomial, may carry negative exponents
    LaurentPoly den_; // ordinary monic polynomial, nonzero constant term
};

inline QCoeff operator*(const Rational& r, const QCoeff& c) {
    return QCoeff::from_rational(r) * c;
}

/// lambda = q - q^{-1}, the ubiquitous commutator coefficient.
QCoeff q_lambda();

} // namespace qdiff

#include <random>
#include <vector>

#include "doctest.h"
#include "qdiff/qcoeff.hpp"

using namespace qdiff;

namespace {

QCoeff C(const std::string& s) { return QCoeff::parse(s); }

/// Random Laurent polynomial with small integer coefficients.
LaurentPoly random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(0, 4);
    std::uniform_int_distribution<long> exp(-4, 4);
    std::uniform_int_distribution<int> coeff(-5, 5);
    LaurentPoly p;
    const int k = n_terms(rng);
    for (int i = 0; i < k; ++i) {
        const Rational c(coeff(rng));
        if (c == 0) continue;
        const long e = exp(rng);
        auto it = p.find(e);
        if (it == p.end())
            p.emplace(e, c);
        else {
            it->second += c;
            if (it->second == 0) p.erase(it);
        }
    }
    return p;
}

QCoeff random_qcoeff(std::mt19937& rng) {
    const LaurentPoly num = random_laurent(rng);
    LaurentPoly den = random_laurent(rng);
    if (den.empty()) den.emplace(0, Rational(1));
    return QCoeff::quotient(num, den);
}

} // namespace

TEST_CASE("canonicalization identities") {
    CHECK(C("1q^1") * C("1q^-1") == QCoeff::one());
    CHECK(C("(1q^2-1q^0)/(1q^1-1q^0)") == C("1q^1+1q^0"));
    CHECK(C("1q^1-1q^-1").str() == "1q^1-1q^-1");
    // Common q-power and gcd clearing: (q^3 - q)/(q^2 - q) = q + 1.
    CHECK(C("(1q^3-1q^1)/(1q^2-1q^1)") == C("1q^1+1q^0"));
    // Zero is unique.
    CHECK(C("0q^0").is_zero());
    CHECK(C("0q^0") == QCoeff::zero());
    CHECK((C("1q^2") - C("1q^2")).is_zero());
    CHECK(QCoeff::zero().str() == "0q^0");
    // Monic denominator: 1/(2q + 2) -> (1/2)/(q + 1).
    CHECK(C("(1q^0)/(2q^1+2q^0)").denominator() ==
          LaurentPoly{{1, Rational(1)}, {0, Rational(1)}});
    CHECK(C("(1q^0)/(2q^1+2q^0)") == C("(1/2q^0)/(1q^1+1q^0)"));
}

TEST_CASE("normalize is idempotent") {
    std::mt19937 rng(20260823);
    for (int i = 0; i < 200; ++i) {
        const QCoeff c = random_qcoeff(rng);
        CHECK(QCoeff::quotient(c.numerator(), c.denominator()) == c);
    }
}

TEST_CASE("arithmetic and ring axioms") {
    std::mt19937 rng(7);
    for (int i = 0; i < 120; ++i) {
        const QCoeff a = random_qcoeff(rng);
        const QCoeff b = random_qcoeff(rng);
        const QCoeff c = random_qcoeff(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + (-a)).is_zero());
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b * b.inverse() == QCoeff::one());
        }
    }
}

TEST_CASE("inversion of zero fails") {
    CHECK_THROWS_AS(QCoeff::zero().inverse(), ZeroDenominator);
    CHECK_THROWS_AS(C("1q^0") / QCoeff::zero(), ZeroDenominator);
    CHECK_THROWS_AS(QCoeff::quotient(LaurentPoly{{0, Rational(1)}}, LaurentPoly{}),
                    ZeroDenominator);
}

TEST_CASE("evaluation at q = 1") {
    CHECK(C("1q^1-1q^-1").eval_at_one() == 0);
    CHECK(C("(1q^1-1q^-1)/(1q^1-1q^0)").eval_at_one() == 2);
    CHECK(C("3/2q^0").eval_at_one() == Rational(3, 2));
    CHECK_THROWS_AS(C("(1q^0)/(1q^1-1q^0)").eval_at_one(), PoleAtOne);
}

TEST_CASE("evaluation at arbitrary rationals") {
    CHECK(C("1q^2+1q^0").eval_at(Rational(2)) == 5);
    CHECK(C("1q^-1").eval_at(Rational(1, 2)) == 2);
    CHECK(C("(1q^0)/(1q^1+1q^0)").eval_at(Rational(1)) == Rational(1, 2));
    CHECK_THROWS_AS(C("1q^-1").eval_at(Rational(0)), ZeroDenominator);
    CHECK_THROWS_AS(C("(1q^0)/(1q^1+1q^0)").eval_at(Rational(-1)),
                    ZeroDenominator);
}

TEST_CASE("poisson_scale divides out q - 1") {
    CHECK(C("1q^1-1q^0").poisson_scale() == QCoeff::one());
    CHECK(C("1q^2-1q^0").poisson_scale() == C("1q^1+1q^0"));
    CHECK(C("1q^1-1q^-1").poisson_scale() == C("1q^0+1q^-1"));
    CHECK(QCoeff::zero().poisson_scale().is_zero());
    CHECK_THROWS_AS(C("1q^1").poisson_scale(), NotVanishingAtOne);
    CHECK_THROWS_AS(C("(1q^1-1q^0)/(1q^1-1q^0)").poisson_scale(),
                    NotVanishingAtOne); // normalizes to 1, which is nonzero
}

TEST_CASE("poisson_scale limit equals the formal derivative at q = 1") {
    std::mt19937 rng(99);
    const LaurentPoly q_minus_1{{1, Rational(1)}, {0, Rational(-1)}};
    for (int i = 0; i < 150; ++i) {
        const LaurentPoly p = random_laurent(rng);
        // c = (q - 1) * p vanishes at q = 1 by construction.
        const QCoeff c =
            QCoeff::from_laurent(q_minus_1) * QCoeff::from_laurent(p);
        // Formal derivative of c at 1: sum of e * c_e over the terms of c.
        Rational derivative_at_one = 0;
        for (const auto& [e, coeff] : c.numerator())
            derivative_at_one += Rational(e) * coeff;
        CHECK(c.poisson_scale().eval_at_one() == derivative_at_one);
    }
}

TEST_CASE("display round trip") {
    const std::vector<std::string> canon = {
        "0q^0",
        "1q^0",
        "-1q^0",
        "3/2q^0",
        "1q^1-1q^-1",
        "-1q^1+1q^-1",
        "1/2q^3+2q^0-5/7q^-2",
        "(1q^0)/(1q^1+1q^0)",
        "(1q^2-2q^0)/(1q^2+1q^1+1q^0)",
    };
    for (const auto& s : canon) {
        CHECK(C(s).str() == s);
    }
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const QCoeff c = random_qcoeff(rng);
        CHECK(QCoeff::parse(c.str()) == c);
    }
}

TEST_CASE("parse accepts insignificant whitespace and signed continuations") {
    CHECK(C(" 1q^1 - 1q^-1 ") == C("1q^1-1q^-1"));
    CHECK(C("1q^0+-1q^1") == C("1q^0-1q^1"));
    CHECK(C("( 1q^0 ) / ( 1q^1 + 1q^0 )") == C("(1q^0)/(1q^1+1q^0)"));
}

TEST_CASE("parse errors carry position information") {
    CHECK_THROWS_AS(QCoeff::parse("1q^"), ParseError);
    CHECK_THROWS_AS(QCoeff::parse("q^1"), ParseError);
    CHECK_THROWS_AS(QCoeff::parse("1q^0 stray"), ParseError);
    CHECK_THROWS_AS(QCoeff::parse("1/0q^0"), ParseError);
    try {
        QCoeff::parse("(1q^0)/\n(1q^");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 5);
    }
}

TEST_CASE("monomial and power accessors") {
    CHECK(C("1q^-3").as_q_power() == -3);
    CHECK(!C("2q^1").as_q_power().has_value());
    CHECK(!C("(1q^0)/(1q^1+1q^0)").as_q_power().has_value());
    CHECK(C("2q^1").as_monomial() == std::make_pair(Rational(2), 1L));
    CHECK(C("3/2q^0").as_rational() == Rational(3, 2));
    CHECK(QCoeff::zero().as_rational() == Rational(0));
    CHECK(!C("1q^1").as_rational().has_value());
    CHECK(q_lambda() == C("1q^1-1q^-1"));
}

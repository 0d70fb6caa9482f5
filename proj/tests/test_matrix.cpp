#include "doctest.h"

#include "qdiff/matrix.hpp"

using namespace qdiff;

namespace {

QCoeff Q(const std::string& s) { return QCoeff::parse(s); }

} // namespace

TEST_CASE("exact rank detects proportional rows") {
    QMatrix m(2, 2);
    m(0, 0) = Q("1q^0");
    m(0, 1) = Q("1q^1");
    m(1, 0) = Q("1q^-1");
    m(1, 1) = Q("1q^0");
    CHECK(exact_rank(m) == 1);
    m(1, 1) = Q("2q^0");
    CHECK(exact_rank(m) == 2);
    CHECK(exact_rank(QMatrix(3, 3)) == 0);
}

TEST_CASE("exact kernel spans the null space") {
    QMatrix m(1, 2);
    m(0, 0) = Q("1q^0");
    m(0, 1) = Q("1q^1");
    const QMatrix k = exact_kernel(m);
    REQUIRE(k.cols() == 1);
    const QMatrix prod = m * k;
    CHECK(prod(0, 0).is_zero());
    CHECK(!(k(0, 0).is_zero() && k(1, 0).is_zero()));

    QMatrix id(2, 2);
    id(0, 0) = QCoeff::one();
    id(1, 1) = QCoeff::one();
    CHECK(exact_kernel(id).cols() == 0);
}

TEST_CASE("exact solve finds a representative or reports inconsistency") {
    QMatrix m(2, 2);
    m(0, 0) = Q("1q^0");
    m(0, 1) = Q("1q^1");
    QVector b(2);
    b(0) = Q("1q^2+1q^0");
    b(1) = QCoeff::zero();
    const auto x = exact_solve_any(m, b);
    REQUIRE(x.has_value());
    const QVector r = m * *x;
    CHECK(r(0) == b(0));
    CHECK(r(1) == b(1));

    b(1) = QCoeff::one();
    CHECK(!exact_solve_any(m, b).has_value());
}

TEST_CASE("specialized rank is a lower bound for the exact rank") {
    QMatrix m(1, 1);
    m(0, 0) = Q("1q^1-2q^0");
    CHECK(exact_rank(m) == 1);
    CHECK(rank_at(m, Rational(2)) == 0); // collapses at the root
    CHECK(rank_at(m, Rational(1)) == 1);

    QMatrix p(1, 1);
    p(0, 0) = QCoeff::quotient({{0, Rational(1)}},
                               {{1, Rational(1)}, {0, Rational(-2)}});
    CHECK_THROWS_AS(rank_at(p, Rational(2)), ZeroDenominator);
}

TEST_CASE("dense products and equality work on exact scalars") {
    QMatrix a(2, 2);
    a(0, 0) = Q("1q^0");
    a(0, 1) = Q("1q^1");
    a(1, 0) = Q("0q^0");
    a(1, 1) = Q("1q^0");
    const QMatrix sq = a * a;
    CHECK(sq(0, 1) == Q("2q^1"));
    CHECK(matrices_equal(a, a));
    CHECK(!matrices_equal(a, sq));
    CHECK(!matrices_equal(a, QMatrix(2, 3)));
}

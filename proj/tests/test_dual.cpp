#include "doctest.h"

#include <vector>

#include "qdiff/catalog.hpp"
#include "qdiff/dual.hpp"
#include "qdiff/matrix.hpp"

using namespace qdiff;

namespace {

TensorElement T(const std::string& s) { return TensorElement::parse(s); }

const AlgebraSpec& mq2() {
    static const AlgebraSpec spec = make_family({Family::aiii, 2});
    return spec;
}

const AlgebraSpec& qplane() {
    static const AlgebraSpec spec = make_family({Family::quantum_plane, 1});
    return spec;
}

const AlgebraSpec& sym3() {
    static const AlgebraSpec spec = make_family({Family::symmetric, 3});
    return spec;
}

/// Number of permutations carrying the slots of b onto the word a.
long matching_permutations(const Word& a, const Word& b) {
    long count = 0;
    for (const auto& perm : all_permutations(static_cast<int>(b.size()))) {
        Word img(b.size());
        for (size_t pos = 0; pos < b.size(); ++pos)
            img[static_cast<size_t>(perm[pos] - 1)] = b[pos];
        if (img == a) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("polynomial terms, arithmetic, and text round trips") {
    const PolyRep f = PolyRep::parse(4, "z1.z4");
    CHECK(f.str() == "1q^0 * z1.z4");
    CHECK(f.coeff({1, 0, 0, 1}) == QCoeff::one());
    CHECK(f.total_degree() == 2);

    // Ascending exponent-vector order puts the pure z2 power first.
    const PolyRep g = PolyRep::parse(2, "3/2q^1 * z2^3 - z1.z2");
    CHECK(g.str() == "3/2q^1 * z2^3 + -1q^0 * z1.z2");
    CHECK(PolyRep::parse(2, g.str()) == g);

    // Repeated factors accumulate; '1' is the empty monomial.
    CHECK(PolyRep::parse(2, "z1.z1.z2^2") ==
          PolyRep::monomial(2, {2, 2}));
    CHECK(PolyRep::parse(2, "z1^0") == PolyRep::scalar(2, QCoeff::one()));
    CHECK(PolyRep::parse(3, "1").str() == "1q^0 * 1");
    CHECK(PolyRep::parse(3, "0").is_zero());
    CHECK(PolyRep::parse(3, "5/3q^0") ==
          PolyRep::scalar(3, QCoeff::parse("5/3q^0")));

    const PolyRep z1 = PolyRep::variable(2, 1);
    const PolyRep z2 = PolyRep::variable(2, 2);
    const PolyRep square = (z1 + z2) * (z1 + z2);
    CHECK(square == PolyRep::parse(2, "z1^2 + 2q^0 * z1.z2 + z2^2"));
    CHECK((square - square).is_zero());
    CHECK((-z1 + z1).is_zero());
    CHECK((QCoeff::q_power(2) * z1).str() == "1q^2 * z1");

    PolyRep h(2);
    h.add_term({1, 1}, QCoeff::one());
    h.add_term({1, 1}, -QCoeff::one());
    CHECK(h.is_zero());

    CHECK_THROWS_AS(PolyRep::parse(2, "z3"), ParseError);
    CHECK_THROWS_AS(PolyRep::parse(2, "z1..z2"), ParseError);
    CHECK_THROWS_AS(PolyRep::parse(2, "z1 z2"), ParseError);
    CHECK_THROWS_AS(h.add_term({1, 2, 3}, QCoeff::one()), DegreeMismatch);
    CHECK_THROWS_AS(h.add_term({-1, 0}, QCoeff::one()), PositionOutOfRange);
    CHECK_THROWS_AS(PolyRep::variable(2, 3), PositionOutOfRange);
    CHECK_THROWS_AS(PolyRep::variable(2, 0), PositionOutOfRange);
    CHECK_THROWS_AS(PolyRep::parse(2, "z1") + PolyRep::parse(3, "z1"),
                    DegreeMismatch);
}

TEST_CASE("dual basis pairing is word diagonal") {
    CHECK(pair(T("X1"), T("X1")) == QCoeff::one());
    CHECK(pair(T("X1"), T("X2")).is_zero());
    CHECK(pair(T("X1"), T("X1.X1")).is_zero());
    CHECK(pair(T("1"), T("1")) == QCoeff::one());

    const DualElement w = T("1q^1 * X1.X2 + 1q^0 * X2.X1");
    const TensorElement t = T("1q^0 * X1.X2 + -1q^1 * X2.X1");
    CHECK(pair(w, t).is_zero());
    CHECK(pair(w, T("X1.X2")) == QCoeff::q_power(1));
}

TEST_CASE("symmetrized pairing values") {
    QsymEngine em(mq2());
    CHECK(pair_symmetrized(em, T("X1.X2"), T("X2.X1")) ==
          QCoeff::q_power(-1));
    CHECK(pair_symmetrized(em, T("X1.X2"), T("X2.X1"),
                           ReductionScheme::insertion_right) ==
          QCoeff::q_power(-1));

    // Mixed degrees add up componentwise.
    CHECK(pair_symmetrized(em, T("X1.X2 + X1"), T("X2.X1 + X1")) ==
          QCoeff::parse("1q^0+1q^-1"));

    // In the commutative algebra the symmetrized pairing counts the
    // permutations matching the two words slot by slot.
    QsymEngine es(sym3());
    const std::vector<std::pair<Word, Word>> samples = {
        {{1, 2}, {2, 1}},    {{1, 2}, {1, 2}},    {{1, 1}, {1, 1}},
        {{1, 1, 2}, {1, 2, 1}}, {{1, 2, 3}, {3, 1, 2}}, {{2, 2, 3}, {2, 3, 2}},
        {{1, 2, 3}, {1, 2, 2}}};
    for (const auto& [a, b] : samples) {
        const QCoeff expected = QCoeff::from_rational(
            Rational(matching_permutations(a, b)));
        CHECK(pair_symmetrized(es, TensorElement::from_word(a),
                               TensorElement::from_word(b)) == expected);
    }
}

TEST_CASE("monomial functionals and their round trips") {
    QsymEngine em(mq2());

    // Degree one: the functional of z_i is the dual generator itself.
    for (int i = 1; i <= 4; ++i) {
        Exponents beta(4, 0);
        beta[static_cast<size_t>(i - 1)] = 1;
        CHECK(w_of_monomial(em, beta) ==
              TensorElement::from_word(Word{i}));
    }

    // Degree zero: the constant functional.
    CHECK(w_of_monomial(em, {0, 0, 0, 0}) == T("1"));
    CHECK(f_rep(em, T("1")).str() == "1q^0 * 1");

    const DualElement w14 = w_of_monomial(em, {1, 0, 0, 1});
    CHECK(w14.str() == "1/2q^0 * X1.X4 + 1/2q^0 * X4.X1");
    const DualElement w23 = w_of_monomial(em, {0, 1, 1, 0});
    CHECK(w23.str() == "1/2q^0 * X2.X3 + 1/2q^0 * X3.X2 + "
                       "-1/2q^1+1/2q^-1 * X4.X1");

    // The representative lies in the row space of the projector: pairing
    // with a symmetrized word equals pairing with the word itself.
    for (const Word& u : all_words(4, 2)) {
        CHECK(pair(w14, em.symmetrized_word(u, ReductionScheme::insertion_left)) ==
              w14.coeff(u));
        CHECK(pair(w23, em.symmetrized_word(u, ReductionScheme::insertion_left)) ==
              w23.coeff(u));
    }

    // Forward evaluation returns exactly the requested monomial, through
    // degree three.
    for (int degree = 2; degree <= 3; ++degree) {
        for (const Word& s : all_sorted_words(4, degree)) {
            const Exponents beta = letter_counts(s, 4);
            CHECK(f_rep(em, w_of_monomial(em, beta)) ==
                  PolyRep::monomial(4, beta));
        }
    }

    // At q = 1 the functional is the uniform average over the words with
    // the monomial's letter content.
    QsymEngine es(sym3());
    CHECK(w_of_monomial(es, {2, 1, 0}).str() ==
          "1/3q^0 * X1.X1.X2 + 1/3q^0 * X1.X2.X1 + 1/3q^0 * X2.X1.X1");

    CHECK_THROWS_AS(w_of_monomial(em, {1, 0}), DegreeMismatch);
    CHECK_THROWS_AS(w_of_monomial(em, {-1, 0, 0, 1}), PositionOutOfRange);
}

TEST_CASE("polynomial representations of functionals") {
    QsymEngine em(mq2());
    CHECK(f_rep(em, T("X1.X2")).str() == "1q^0 * z1.z2");
    CHECK(f_rep(em, T("X2.X1")).str() == "1q^1 * z1.z2");
    CHECK(f_rep(em, T("X1.X2"), RepScheme::f1).str() ==
          "1/2q^0+1/2q^-1 * z1.z2");

    // Linearity.
    const DualElement a = T("X1.X4");
    const DualElement b = T("X2.X3");
    CHECK(f_rep(em, a + QCoeff::q_power(2) * b) ==
          f_rep(em, a) + QCoeff::q_power(2) * f_rep(em, b));

    // Faithfulness on the row space: the degree-two representation matrix
    // of the row-space basis has full rank.
    const auto proj = em.projector(2);
    const std::vector<Word> words = all_words(4, 2);
    const std::vector<Word> sorted = all_sorted_words(4, 2);
    QMatrix coeffs(static_cast<long>(sorted.size()),
                   static_cast<long>(words.size()));
    for (long k = 0; k < static_cast<long>(words.size()); ++k) {
        DualElement row_functional;
        for (long c = 0; c < static_cast<long>(words.size()); ++c) {
            const QCoeff& e = proj->matrix(k, c);
            if (!e.is_zero())
                row_functional.add_term(words[static_cast<size_t>(c)], e);
        }
        const PolyRep rep = f_rep(em, row_functional);
        for (long s = 0; s < static_cast<long>(sorted.size()); ++s)
            coeffs(s, k) =
                rep.coeff(letter_counts(sorted[static_cast<size_t>(s)], 4));
    }
    CHECK(exact_rank(coeffs) == 10);

    // The two schemes agree at q = 1.
    for (const std::string& sample :
         {"X1.X2.X4", "1q^1 * X4.X2.X1 + 1q^0 * X3.X1.X2", "X2.X3",
          "X4.X4.X1"}) {
        const PolyRep f1 = f_rep(em, T(sample), RepScheme::f1);
        const PolyRep f2 = f_rep(em, T(sample), RepScheme::f2);
        const PolyRep diff = f1 - f2;
        for (const auto& [e, c] : diff.terms())
            CHECK(c.eval_at_one() == 0);
    }

    // In the commutative algebra they agree identically.
    QsymEngine es(sym3());
    for (const std::string& sample : {"X1.X2", "X3.X1.X2", "X2.X2.X3"}) {
        CHECK(f_rep(es, T(sample), RepScheme::f1) ==
              f_rep(es, T(sample), RepScheme::f2));
    }
}

TEST_CASE("dual algebra commutation exponents") {
    using Rels = std::vector<DualRelation>;
    CHECK(dual_relations(qplane()) == Rels{{2, 1, 1}});
    CHECK(dual_relations(mq2()) ==
          Rels{{2, 1, 1}, {3, 1, 1}, {3, 2, 0}, {4, 1, 0}, {4, 2, 1},
               {4, 3, 1}});
    CHECK(dual_relations(sym3()) ==
          Rels{{2, 1, 0}, {3, 1, 0}, {3, 2, 0}});
    CHECK(dual_relations(make_family({Family::fq, 2})) ==
          Rels{{2, 1, -1}, {3, 1, -1}, {3, 2, 0}, {4, 1, 0}, {4, 2, -1},
               {4, 3, -1}});
    CHECK(dual_relations(make_family({Family::ci, 3})) ==
          Rels{{2, 1, -2}, {3, 1, -2}, {3, 2, -1}, {4, 1, 0},  {4, 2, -2},
               {4, 3, 0},  {5, 1, 0},  {5, 2, -1}, {5, 3, -1}, {5, 4, -2},
               {6, 1, 0},  {6, 2, 0},  {6, 3, -2}, {6, 4, 0},  {6, 5, -2}});

    // Each exponent is the negative of the presentation's twist exponent.
    for (const AlgebraSpec& spec :
         {mq2(), qplane(), sym3(), make_family({Family::fq, 2})}) {
        for (const DualRelation& r : dual_relations(spec))
            CHECK(r.exponent == -spec.alpha(r.i, r.j));
    }
}

TEST_CASE("star products") {
    QsymEngine eq(qplane());
    const PolyRep a1 = PolyRep::variable(2, 1);
    const PolyRep a2 = PolyRep::variable(2, 2);
    CHECK(star_product(eq, a1, a2).str() == "1q^0 * z1.z2");
    CHECK(star_product(eq, a2, a1).str() == "1q^1 * z1.z2");

    QsymEngine em(mq2());
    const PolyRep z1 = PolyRep::variable(4, 1);
    const PolyRep z2 = PolyRep::variable(4, 2);
    const PolyRep z4 = PolyRep::variable(4, 4);
    CHECK(star_product(em, z2, z1) ==
          QCoeff::q_power(1) * star_product(em, z1, z2));
    CHECK(star_product(em, star_product(em, z1, z2), z4).str() ==
          "1q^0 * z1.z2.z4");
    CHECK(star_product(em, z1, star_product(em, z2, z4)).str() ==
          "1q^0 * z1.z2.z4");

    // Associativity on variable triples from a mixed set.
    for (const int i : {1, 2, 4}) {
        for (const int j : {1, 2, 4}) {
            for (const int k : {1, 2, 4}) {
                const PolyRep zi = PolyRep::variable(4, i);
                const PolyRep zj = PolyRep::variable(4, j);
                const PolyRep zk = PolyRep::variable(4, k);
                CHECK(star_product(em, star_product(em, zi, zj), zk) ==
                      star_product(em, zi, star_product(em, zj, zk)));
            }
        }
    }

    // The constant is a two-sided unit.
    const PolyRep one4 = PolyRep::scalar(4, QCoeff::one());
    const PolyRep f = star_product(em, z1, z2);
    CHECK(star_product(em, one4, f) == f);
    CHECK(star_product(em, f, one4) == f);
    CHECK(star_product(em, T("1"), T("X1.X2")) == f_rep(em, T("X1.X2")));

    // Bilinearity through the canonical lift.
    CHECK(star_product(em, z1 + z2, z4) ==
          star_product(em, z1, z4) + star_product(em, z2, z4));

    // Representation kernels absorb concatenation on either side.
    const DualElement kill_q = T("X2.X1") - QCoeff::q_power(1) * T("X1.X2");
    CHECK(f_rep(eq, kill_q).is_zero());
    CHECK(f_rep(eq, concat(kill_q, T("X1"))).is_zero());
    CHECK(f_rep(eq, concat(T("X2"), kill_q)).is_zero());
    const DualElement kill_m = T("X4.X1") - T("X1.X4");
    CHECK(f_rep(em, kill_m).is_zero());
    CHECK(f_rep(em, concat(kill_m, T("X2"))).is_zero());
    CHECK(f_rep(em, concat(T("X3"), kill_m)).is_zero());
}

TEST_CASE("canonical lift inverts the representation") {
    QsymEngine em(mq2());
    const PolyRep f =
        PolyRep::parse(4, "2q^0 * 1 + 1q^1 * z1 + 1q^0 * z2.z3");
    CHECK(f_rep(em, dual_of_poly(em, f)) == f);

    CHECK_THROWS_AS(dual_of_poly(em, PolyRep::parse(2, "z1")),
                    DegreeMismatch);
}

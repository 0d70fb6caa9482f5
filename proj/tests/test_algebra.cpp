#include <algorithm>
#include <random>

#include "doctest.h"
#include "qdiff/algebra.hpp"
#include "qdiff/catalog.hpp"

using namespace qdiff;

namespace {

TensorElement T(const std::string& s) { return TensorElement::parse(s); }

AlgebraSpec mq2() { return make_family({Family::aiii, 2}); }

/// Apply the relation once at position pos of word w (test-local rewriting
/// oracle built from the public relation accessors).
TensorElement apply_at(const AlgebraSpec& spec, const Word& w, size_t pos) {
    TensorElement repl = TensorElement::from_word(
        {w[pos + 1], w[pos]}, spec.b(w[pos], w[pos + 1]));
    repl += spec.tail(w[pos], w[pos + 1]);
    TensorElement out;
    for (const auto& [rw, rc] : repl.terms()) {
        Word full(w.begin(), w.begin() + pos);
        full.insert(full.end(), rw.begin(), rw.end());
        full.insert(full.end(), w.begin() + pos + 2, w.end());
        out.add_term(full, rc);
    }
    return out;
}

/// Reduce t by applying relations at uniformly random reducible positions
/// until none remain.  Used as an order-independence oracle.
TensorElement random_order_reduce(const AlgebraSpec& spec, TensorElement t,
                                  std::mt19937& rng) {
    for (;;) {
        std::vector<std::pair<Word, size_t>> redexes;
        for (const auto& [w, c] : t.terms())
            for (size_t pos = 0; pos + 1 < w.size(); ++pos)
                if (w[pos] > w[pos + 1]) redexes.emplace_back(w, pos);
        if (redexes.empty()) return t;
        std::uniform_int_distribution<size_t> pick(0, redexes.size() - 1);
        const auto& [w, pos] = redexes[pick(rng)];
        const QCoeff c = t.coeff(w);
        t.add_term(w, -c);
        t += c * apply_at(spec, w, pos);
    }
}

TensorElement random_element(const AlgebraSpec& spec, int max_degree,
                             std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(1, 4);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> letter(1, spec.n_generators());
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<long> power(-2, 2);
    TensorElement t;
    const int k = n_terms(rng);
    for (int i = 0; i < k; ++i) {
        Word w;
        const int d = deg(rng);
        for (int s = 0; s < d; ++s) w.push_back(letter(rng));
        t.add_term(w, QCoeff::monomial(Rational(coeff(rng)), power(rng)));
    }
    return t;
}

} // namespace

TEST_CASE("normal form of the basic crossing relation") {
    const AlgebraSpec spec = mq2();
    CHECK(normal_form(spec, T("X4.X1")) ==
          T("1q^0 * X1.X4 + -1q^1+1q^-1 * X2.X3"));
    // Sorted words are already normal.
    CHECK(normal_form(spec, T("X1.X3.X4")) == T("X1.X3.X4"));
    CHECK(normal_form(spec, T("1")) == T("1"));
    CHECK(normal_form(spec, TensorElement()).is_zero());
}

TEST_CASE("normal form agrees with the random-order reduction oracle") {
    const AlgebraSpec spec = mq2();
    std::mt19937 rng(42);
    // Degree-3 crossing word, all reduction orders agree.
    TensorElement expected = random_order_reduce(spec, T("X4.X3.X1"), rng);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(random_order_reduce(spec, T("X4.X3.X1"), rng) == expected);
    CHECK(normal_form(spec, T("X4.X3.X1")) == expected);
    CHECK(expected == T("1q^-2 * X1.X3.X4 + -1q^0+1q^-2 * X2.X3.X3"));
    // Random elements, random orders.
    for (int trial = 0; trial < 30; ++trial) {
        const TensorElement t = random_element(spec, 4, rng);
        CHECK(random_order_reduce(spec, t, rng) == normal_form(spec, t));
    }
}

TEST_CASE("normal form is idempotent, linear, and supported on sorted words") {
    std::mt19937 rng(5);
    for (const AlgebraSpec& spec :
         {mq2(), make_family({Family::fq, 2}), make_family({Family::ci, 2})}) {
        for (int trial = 0; trial < 25; ++trial) {
            const TensorElement a = random_element(spec, 4, rng);
            const TensorElement b = random_element(spec, 4, rng);
            const TensorElement nf = normal_form(spec, a);
            CHECK(normal_form(spec, nf) == nf);
            for (const auto& [w, c] : nf.terms())
                CHECK(std::is_sorted(w.begin(), w.end()));
            const QCoeff s = QCoeff::monomial(Rational(2, 3), -1);
            CHECK(normal_form(spec, a + s * b) ==
                  normal_form(spec, a) + s * normal_form(spec, b));
        }
    }
}

TEST_CASE("normal form is a well-defined product on the quotient") {
    std::mt19937 rng(11);
    const AlgebraSpec spec = mq2();
    for (int trial = 0; trial < 20; ++trial) {
        const TensorElement a = random_element(spec, 3, rng);
        const TensorElement b = random_element(spec, 3, rng);
        CHECK(normal_form(spec, concat(a, b)) ==
              normal_form(spec,
                          concat(normal_form(spec, a), normal_form(spec, b))));
    }
}

TEST_CASE("relation elements and their ideal lie in the kernel") {
    const AlgebraSpec spec = mq2();
    for (const Relation& rel : spec.relations()) {
        const TensorElement r = spec.relation_element(rel.i, rel.j);
        CHECK(normal_form(spec, r).is_zero());
        // Two-sided multiples stay in the ideal.
        CHECK(normal_form(spec, concat(T("X3"), r)).is_zero());
        CHECK(normal_form(spec, concat(r, T("X2.X4"))).is_zero());
        CHECK(normal_form(spec, concat(T("X1"), concat(r, T("X4")))).is_zero());
    }
}

TEST_CASE("shared cache does not change results") {
    const AlgebraSpec spec = mq2();
    NormalFormCache cache;
    std::mt19937 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        const TensorElement t = random_element(spec, 4, rng);
        CHECK(normal_form(spec, t, &cache) == normal_form(spec, t));
    }
}

TEST_CASE("scaling certificate passes for the catalog families") {
    CHECK(dcp_check(mq2()).passed);
    CHECK(dcp_check(make_family({Family::aiii, 3})).passed);
    CHECK(dcp_check(make_family({Family::fq, 3})).passed);
    CHECK(dcp_check(make_family({Family::symmetric, 3})).passed);
    CHECK(dcp_check(make_family({Family::quantum_plane, 1})).passed);
}

TEST_CASE("scaling certificate rejects the four-generator counterexample") {
    // X3X1 = X1X3 + X2X2 cannot coexist with X4X1 = qX1X4 when X4 commutes
    // with X2 and X3: the scaling by generator 4 breaks the (3,1) relation.
    std::vector<Relation> rels(6);
    rels[0] = {2, 1, 0, {}};
    rels[1] = {3, 1, 0, TensorElement::from_word({2, 2})};
    rels[2] = {3, 2, 0, {}};
    rels[3] = {4, 1, 1, {}};
    rels[4] = {4, 2, 0, {}};
    rels[5] = {4, 3, 0, {}};
    const AlgebraSpec spec = AlgebraSpec::build("dcp_counterexample", 4, rels);

    // Independent residue computation: scale the (3,1) relation element by
    // q^{alpha_4j} letterwise and reduce.
    const TensorElement image =
        T("1q^1 * X1.X3 + 1q^0 * X2.X2 + -1q^1 * X3.X1");
    CHECK(normal_form(spec, image) == T("-1q^1+1q^0 * X2.X2"));

    const CheckReport report = dcp_check(spec);
    CHECK(!report.passed);
    REQUIRE(report.findings.size() == 1);
    CHECK(report.findings[0] ==
          "sigma_4 applied to relation (3,1) leaves residue "
          "-1q^1+1q^0 * X2.X2");
}

TEST_CASE("overlap resolution passes for the catalog families") {
    CHECK(diamond_check(make_family({Family::aiii, 3})).passed);
    CHECK(diamond_check(make_family({Family::fq, 3})).passed);
    CHECK(diamond_check(make_family({Family::symmetric, 4})).passed);
    CHECK(diamond_check(make_family({Family::quantum_plane, 1})).passed);
}

TEST_CASE("overlap resolution rejects the three-generator counterexample") {
    std::vector<Relation> rels(3);
    rels[0] = {2, 1, 1, {}}; // X2X1 = qX1X2
    rels[1] = {3, 1, 0, {}}; // X3X1 = X1X3
    rels[2] = {3, 2, 0, TensorElement::from_word({1, 1})}; // X3X2 = X2X3 + X1X1
    const AlgebraSpec spec =
        AlgebraSpec::build("diamond_counterexample", 3, rels);

    // This spec still passes the scaling certificate...
    CHECK(dcp_check(spec).passed);
    // ...but the X3.X2.X1 overlap does not resolve.
    const TensorElement left =
        normal_form(spec, apply_at(spec, {3, 2, 1}, 0));
    const TensorElement right =
        normal_form(spec, apply_at(spec, {3, 2, 1}, 1));
    CHECK(left - right == T("-1q^1+1q^0 * X1.X1.X1"));

    const CheckReport report = diamond_check(spec);
    CHECK(!report.passed);
    REQUIRE(report.findings.size() == 1);
    CHECK(report.findings[0].find("ambiguity X3.X2.X1") != std::string::npos);
    CHECK(report.findings[0].find("difference -1q^1+1q^0 * X1.X1.X1") !=
          std::string::npos);
}

TEST_CASE("sorted monomial basis enumeration") {
    const AlgebraSpec spec = make_family({Family::aiii, 2});
    CHECK(pbw_basis(spec, 0) == std::vector<PBWMonomial>{{0, 0, 0, 0}});
    CHECK(pbw_basis(spec, 1).size() == 4);
    CHECK(pbw_basis(spec, 2).size() == 10);
    CHECK(pbw_basis(spec, 3).size() == 20);
    const AlgebraSpec qp = make_family({Family::quantum_plane, 1});
    CHECK(pbw_basis(qp, 2) ==
          std::vector<PBWMonomial>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("spec construction validates its input") {
    std::vector<Relation> rels(1);
    rels[0] = {2, 1, 0, {}};
    CHECK_THROWS_AS(AlgebraSpec::build("incomplete", 3, rels), MissingRelation);

    std::vector<Relation> dup = {{2, 1, 0, {}}, {2, 1, 1, {}}};
    CHECK_THROWS_AS(AlgebraSpec::build("dup", 2, dup), QdiffError);

    // Tail letter not below i.
    std::vector<Relation> bad = {{2, 1, 0, TensorElement::from_word({2, 2})}};
    CHECK_THROWS_AS(AlgebraSpec::build("bad", 2, bad), QdiffError);

    // Unsorted tail word.
    std::vector<Relation> unsorted = {
        {3, 1, 0, TensorElement::from_word({2, 1})},
        {2, 1, 0, {}},
        {3, 2, 0, {}}};
    CHECK_THROWS_AS(AlgebraSpec::build("unsorted", 3, unsorted), QdiffError);

    // Degree-1 tails need the relaxed flag.
    std::vector<Relation> inhom = {{2, 1, 0, TensorElement::from_word({1})}};
    CHECK_THROWS_AS(AlgebraSpec::build("inhom", 2, inhom), QdiffError);
    const AlgebraSpec relaxed =
        AlgebraSpec::build("inhom", 2, inhom, {}, true);
    CHECK(!relaxed.homogeneous());
    CHECK(mq2().homogeneous());
}

TEST_CASE("inhomogeneous rewriting in the relaxed mode") {
    const std::string weyl_text =
        "qalg 1\nname qweyl\ngens 2\nrel 2 1 : 1q^-2 ; -1q^-2\n";
    CHECK_THROWS_AS(AlgebraSpec::parse_qalg(weyl_text), ParseError);
    const AlgebraSpec weyl = AlgebraSpec::parse_qalg(weyl_text, true);
    CHECK(!weyl.homogeneous());
    CHECK(normal_form(weyl, T("X2.X1")) == T("1q^-2 * X1.X2 + -1q^-2 * 1"));
    CHECK(normal_form(weyl, T("X2.X1.X1")) ==
          T("-1q^-2-1q^-4 * X1 + 1q^-4 * X1.X1.X2"));
}

TEST_CASE("qalg file parsing reports precise positions") {
    const std::string good =
        "qalg 1\n"
        "# a comment line\n"
        "name demo\n"
        "gens 3\n"
        "rel 2 1 : 1q^-1 ;\n"
        "rel 3 1 : 1q^0 ; 1q^1-1q^-1 * 2 2\n"
        "rel 3 2 : 1q^0 ;   # trailing comment\n";
    const AlgebraSpec spec = AlgebraSpec::parse_qalg(good);
    CHECK(spec.name() == "demo");
    CHECK(spec.n_generators() == 3);
    CHECK(spec.alpha(2, 1) == -1);
    CHECK(spec.tail(3, 1) == T("1q^1-1q^-1 * X2.X2"));

    auto expect_error_at = [](const std::string& text, int line) {
        try {
            AlgebraSpec::parse_qalg(text);
            CHECK(false);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    // Twist coefficient must be a pure q-power with unit coefficient.
    expect_error_at("qalg 1\nname x\ngens 2\nrel 2 1 : 2q^1 ;\n", 4);
    // Tail letter not below i.
    expect_error_at("qalg 1\nname x\ngens 2\nrel 2 1 : 1q^0 ; 1q^0 * 2 2\n", 4);
    // Unknown directive.
    expect_error_at("qalg 1\nname x\ngens 2\nwhat 1\nrel 2 1 : 1q^0 ;\n", 4);
    // names arity mismatch.
    expect_error_at("qalg 1\nname x\ngens 2\nnames a\nrel 2 1 : 1q^0 ;\n", 4);
    // Bad header.
    expect_error_at("qalg 2\n", 1);
    // Duplicate relation.
    expect_error_at(
        "qalg 1\nname x\ngens 2\nrel 2 1 : 1q^0 ;\nrel 2 1 : 1q^1 ;\n", 5);
    // Missing relation line.
    CHECK_THROWS_AS(AlgebraSpec::parse_qalg("qalg 1\nname x\ngens 2\n"),
                    MissingRelation);
}

#include "qdiff/dual.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <utility>

#include "qdiff/errors.hpp"
#include "qdiff/matrix.hpp"
#include "qdiff/text.hpp"

namespace qdiff {
namespace {

/// Index of a word in all_words(n_generators, |w|) order.
long word_index(const Word& w, int n_generators) {
    long idx = 0;
    for (int letter : w) idx = idx * n_generators + (letter - 1);
    return idx;
}

Rational factorial(size_t n) {
    Rational r(1);
    for (size_t k = 2; k <= n; ++k) r *= Rational(static_cast<long>(k));
    return r;
}

int joined_variable_count(const PolyRep& a, const PolyRep& b) {
    if (a.n_variables() == b.n_variables()) return a.n_variables();
    if (a.is_zero() && a.n_variables() == 0) return b.n_variables();
    if (b.is_zero() && b.n_variables() == 0) return a.n_variables();
    throw DegreeMismatch("polynomials over " + std::to_string(a.n_variables()) +
                         " and " + std::to_string(b.n_variables()) +
                         " variables cannot be combined");
}

int parse_number(TextCursor& cur, const std::string& what) {
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected " + what);
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        v = v * 10 + (cur.advance() - '0');
        if (v > 1000000) cur.fail(what + " out of range");
    }
    return static_cast<int>(v);
}

/// monomial := '1' | factor ('.' factor)*, factor := 'z' int ['^' int]
Exponents parse_monomial_prefix(TextCursor& cur, int n_variables) {
    Exponents e(static_cast<size_t>(n_variables), 0);
    cur.skip_ws();
    if (cur.peek() == '1') {
        cur.advance();
        return e;
    }
    for (;;) {
        cur.skip_ws();
        if (!cur.try_consume('z')) cur.fail("expected variable 'z<index>'");
        const int v = parse_number(cur, "variable index after 'z'");
        if (v < 1 || v > n_variables)
            cur.fail("variable index " + std::to_string(v) + " outside 1.." +
                     std::to_string(n_variables));
        int power = 1;
        const size_t before_caret = cur.pos();
        cur.skip_ws();
        if (cur.try_consume('^'))
            power = parse_number(cur, "exponent after '^'");
        else
            cur.seek(before_caret);
        e[static_cast<size_t>(v - 1)] += power;

        const size_t before_dot = cur.pos();
        cur.skip_ws();
        if (!cur.try_consume('.')) {
            cur.seek(before_dot);
            break;
        }
    }
    return e;
}

std::string monomial_str(const Exponents& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '.';
        s += 'z';
        s += std::to_string(i + 1);
        if (e[i] > 1) {
            s += '^';
            s += std::to_string(e[i]);
        }
    }
    return s.empty() ? "1" : s;
}

} // namespace

PolyRep::PolyRep(int n_variables) : n_variables_(n_variables) {
    if (n_variables < 0)
        throw PositionOutOfRange("variable count cannot be negative");
}

PolyRep PolyRep::scalar(int n_variables, const QCoeff& c) {
    return monomial(n_variables, Exponents(static_cast<size_t>(n_variables), 0),
                    c);
}

PolyRep PolyRep::variable(int n_variables, int i) {
    if (i < 1 || i > n_variables)
        throw PositionOutOfRange("variable index " + std::to_string(i) +
                                 " outside 1.." + std::to_string(n_variables));
    Exponents e(static_cast<size_t>(n_variables), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    return monomial(n_variables, std::move(e));
}

PolyRep PolyRep::monomial(int n_variables, Exponents exponents,
                          const QCoeff& c) {
    PolyRep f(n_variables);
    f.add_term(exponents, c);
    return f;
}

QCoeff PolyRep::coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? QCoeff::zero() : it->second;
}

void PolyRep::add_term(const Exponents& e, const QCoeff& c) {
    if (static_cast<int>(e.size()) != n_variables_)
        throw DegreeMismatch("exponent vector has " + std::to_string(e.size()) +
                             " entries; the polynomial ring has " +
                             std::to_string(n_variables_) + " variables");
    for (int a : e)
        if (a < 0) throw PositionOutOfRange("negative exponent in monomial");
    if (c.is_zero()) return;
    const auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int PolyRep::total_degree() const {
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int a : e) d += a;
        best = std::max(best, d);
    }
    return best;
}

PolyRep PolyRep::operator+(const PolyRep& o) const {
    PolyRep r(joined_variable_count(*this, o));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

PolyRep PolyRep::operator-(const PolyRep& o) const { return *this + (-o); }

PolyRep PolyRep::operator-() const {
    PolyRep r(n_variables_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

PolyRep& PolyRep::operator+=(const PolyRep& o) {
    *this = *this + o;
    return *this;
}

PolyRep& PolyRep::operator-=(const PolyRep& o) {
    *this = *this - o;
    return *this;
}

std::string PolyRep::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += c.str();
        s += " * ";
        s += monomial_str(e);
    }
    return s;
}

PolyRep PolyRep::parse(int n_variables, const std::string& text) {
    TextCursor cur(text);
    PolyRep out(n_variables);
    Rational sign(1);
    // A bare "0" is the zero polynomial (the canonical text of zero).
    cur.skip_ws();
    const size_t at_start = cur.pos();
    if (cur.try_consume('0')) {
        cur.skip_ws();
        if (cur.at_end()) return out;
        cur.seek(at_start);
    }
    for (;;) {
        QCoeff c = QCoeff::one();
        Exponents e(static_cast<size_t>(n_variables), 0);
        const size_t save = cur.pos();
        bool have_coeff = false;
        try {
            c = QCoeff::parse_prefix(cur);
            have_coeff = true;
        } catch (const ParseError&) {
            cur.seek(save);
        }
        if (have_coeff) {
            const size_t after_coeff = cur.pos();
            cur.skip_ws();
            if (cur.try_consume('*')) {
                e = parse_monomial_prefix(cur, n_variables);
            } else {
                cur.seek(after_coeff);
            }
        } else {
            cur.skip_ws();
            if (cur.try_consume('-'))
                c = -c;
            else
                cur.try_consume('+');
            e = parse_monomial_prefix(cur, n_variables);
        }
        out.add_term(e, QCoeff::from_rational(sign) * c);

        const size_t at_term_end = cur.pos();
        cur.skip_ws();
        if (cur.try_consume('+')) {
            sign = 1;
        } else if (cur.try_consume('-')) {
            sign = -1;
        } else {
            cur.seek(at_term_end);
            break;
        }
    }
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return out;
}

PolyRep operator*(const QCoeff& c, const PolyRep& f) {
    PolyRep r(f.n_variables());
    for (const auto& [e, fc] : f.terms()) r.add_term(e, c * fc);
    return r;
}

PolyRep operator*(const PolyRep& a, const PolyRep& b) {
    PolyRep r(joined_variable_count(a, b));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

QCoeff pair(const DualElement& w, const TensorElement& t) {
    const bool w_smaller = w.term_count() <= t.term_count();
    const TensorElement& probe = w_smaller ? w : t;
    const TensorElement& table = w_smaller ? t : w;
    QCoeff out = QCoeff::zero();
    for (const auto& [word, c] : probe.terms()) {
        const QCoeff other = table.coeff(word);
        if (!other.is_zero()) out += c * other;
    }
    return out;
}

QCoeff pair_symmetrized(QsymEngine& engine, const DualElement& w,
                        const TensorElement& t, ReductionScheme scheme) {
    std::set<size_t> degrees;
    for (const auto& [word, c] : t.terms()) degrees.insert(word.size());
    QCoeff out = QCoeff::zero();
    for (const size_t d : degrees) {
        if (w.graded_component(d).is_zero()) continue;
        const TensorElement fix =
            engine.symmetrize(t.graded_component(d), scheme);
        out += QCoeff::from_rational(factorial(d)) * pair(w, fix);
    }
    return out;
}

QCoeff pair_symmetrized(const AlgebraSpec& spec, const DualElement& w,
                        const TensorElement& t) {
    QsymEngine engine(spec);
    return pair_symmetrized(engine, w, t);
}

DualElement w_of_monomial(QsymEngine& engine, const Exponents& beta,
                          ReductionScheme scheme) {
    const int n_gens = engine.spec().n_generators();
    if (static_cast<int>(beta.size()) != n_gens)
        throw DegreeMismatch("exponent vector has " +
                             std::to_string(beta.size()) +
                             " entries; the algebra has " +
                             std::to_string(n_gens) + " generators");
    long degree = 0;
    for (const int a : beta) {
        if (a < 0) throw PositionOutOfRange("negative exponent in monomial");
        degree += a;
    }
    if (degree == 0) return TensorElement::scalar(QCoeff::one());

    const auto proj = engine.projector(static_cast<int>(degree), scheme);
    const QMatrix& m = proj->matrix;
    const std::vector<Word> sorted =
        all_sorted_words(n_gens, static_cast<int>(degree));
    const long s_count = static_cast<long>(sorted.size());

    // Constraint rows: the transpose of the projector, restricted to the
    // columns at nondecreasing words.
    QMatrix a(s_count, m.rows());
    for (long s = 0; s < s_count; ++s) {
        const long col = word_index(sorted[static_cast<size_t>(s)], n_gens);
        for (long r = 0; r < m.rows(); ++r) a(s, r) = m(r, col);
    }
    QVector b(s_count);
    const Word target = word_of_counts(beta);
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), target);
    b(static_cast<long>(it - sorted.begin())) =
        QCoeff::from_rational(Rational(1) / multinomial(beta));

    const auto u = exact_solve_any(a, b);
    if (!u)
        throw SingularSystem(
            "no functional represents the monomial with exponents " +
            monomial_str(beta) + " at degree " + std::to_string(degree));

    // Project the solution onto the row space so the representative does not
    // depend on which solution the elimination picked.
    const QVector coords = m.transpose() * (*u);
    const std::vector<Word> words =
        all_words(n_gens, static_cast<int>(degree));
    DualElement out;
    for (long k = 0; k < coords.size(); ++k)
        if (!coords(k).is_zero())
            out.add_term(words[static_cast<size_t>(k)], coords(k));
    return out;
}

DualElement w_of_monomial(const AlgebraSpec& spec, const Exponents& beta) {
    QsymEngine engine(spec);
    return w_of_monomial(engine, beta);
}

DualElement dual_of_poly(QsymEngine& engine, const PolyRep& f,
                         ReductionScheme scheme) {
    const int n_gens = engine.spec().n_generators();
    if (f.n_variables() != n_gens && !(f.is_zero() && f.n_variables() == 0))
        throw DegreeMismatch("polynomial over " +
                             std::to_string(f.n_variables()) +
                             " variables does not match the " +
                             std::to_string(n_gens) + " generators");
    DualElement out;
    for (const auto& [e, c] : f.terms())
        out += c * w_of_monomial(engine, e, scheme);
    return out;
}

PolyRep f_rep(QsymEngine& engine, const DualElement& w, RepScheme scheme,
              ReductionScheme rscheme) {
    const int n_gens = engine.spec().n_generators();
    PolyRep out(n_gens);
    std::set<int> degrees;
    for (const auto& [word, c] : w.terms())
        degrees.insert(static_cast<int>(word.size()));
    for (const int d : degrees) {
        for (const Word& s : all_sorted_words(n_gens, d)) {
            const Exponents alpha = letter_counts(s, n_gens);
            QCoeff c = QCoeff::zero();
            if (scheme == RepScheme::f2) {
                c = QCoeff::from_rational(multinomial(alpha)) *
                    pair(w, engine.symmetrized_word(s, rscheme));
            } else {
                Word u = s;
                do {
                    c += pair(w, engine.symmetrized_word(u, rscheme));
                } while (std::next_permutation(u.begin(), u.end()));
            }
            out.add_term(alpha, c);
        }
    }
    return out;
}

PolyRep f_rep(const AlgebraSpec& spec, const DualElement& w,
              RepScheme scheme) {
    QsymEngine engine(spec);
    return f_rep(engine, w, scheme);
}

std::vector<DualRelation> dual_relations(QsymEngine& engine,
                                         ReductionScheme scheme) {
    const int n_gens = engine.spec().n_generators();
    const auto proj = engine.projector(2, scheme);
    const QMatrix& m = proj->matrix;
    const long dim = m.rows();
    const long expected =
        static_cast<long>(n_gens) * (n_gens - 1) / 2;
    const long kernel_dim = dim - exact_rank(m);
    if (kernel_dim != expected)
        throw NotQuasipolynomial(
            "transpose kernel has dimension " + std::to_string(kernel_dim) +
            "; two-term dual rules need " + std::to_string(expected));

    std::vector<DualRelation> out;
    for (int i = 2; i <= n_gens; ++i) {
        for (int j = 1; j < i; ++j) {
            const std::string pair_name =
                "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            const long row_ij = word_index(Word{i, j}, n_gens);
            const long row_ji = word_index(Word{j, i}, n_gens);
            long exponent = 0;
            bool found = false;
            for (long col = 0; col < m.cols() && !found; ++col) {
                const QCoeff& a = m(row_ij, col);
                const QCoeff& b = m(row_ji, col);
                if (a.is_zero() && b.is_zero()) continue;
                if (a.is_zero() || b.is_zero())
                    throw NotQuasipolynomial("rows of pair " + pair_name +
                                             " are not proportional");
                const auto power = (a / b).as_q_power();
                if (!power)
                    throw NotQuasipolynomial("row ratio of pair " + pair_name +
                                             " is not a power of q: " +
                                             (a / b).str());
                exponent = *power;
                found = true;
            }
            if (!found)
                throw NotQuasipolynomial("rows of pair " + pair_name +
                                         " vanish");
            const QCoeff factor = QCoeff::q_power(exponent);
            for (long col = 0; col < m.cols(); ++col)
                if (m(row_ij, col) != factor * m(row_ji, col))
                    throw NotQuasipolynomial(
                        "rows of pair " + pair_name +
                        " are not proportional by q^" +
                        std::to_string(exponent));
            out.push_back(DualRelation{i, j, exponent});
        }
    }
    return out;
}

std::vector<DualRelation> dual_relations(const AlgebraSpec& spec) {
    QsymEngine engine(spec);
    return dual_relations(engine);
}

PolyRep star_product(QsymEngine& engine, const DualElement& w1,
                     const DualElement& w2, RepScheme scheme,
                     ReductionScheme rscheme) {
    return f_rep(engine, concat(w1, w2), scheme, rscheme);
}

PolyRep star_product(QsymEngine& engine, const PolyRep& f, const PolyRep& g,
                     RepScheme scheme, ReductionScheme rscheme) {
    return star_product(engine, dual_of_poly(engine, f, rscheme),
                        dual_of_poly(engine, g, rscheme), scheme, rscheme);
}

} // namespace qdiff

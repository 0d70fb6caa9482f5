#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdiff/qsym.hpp"
#include "qdiff/tensor.hpp"

namespace qdiff {

/// Elements of the graded dual of the tensor algebra: the same word-indexed
/// linear-combination data as TensorElement, read against the dual basis
/// X1*, ..., XN*.  The basis pairing is word-diagonal, so the representation
/// (and its text form) is shared with TensorElement.
using DualElement = TensorElement;

/// Exponent vector (a_1, ..., a_N) of a monomial z1^a1...zN^aN in commuting
/// variables.
using Exponents = std::vector<int>;

/// Polynomial in commuting variables z1..zN with exact coefficients.  Terms
/// are kept in ascending lexicographic order of the exponent vector; zero
/// coefficients are never stored.
class PolyRep {
public:
    using TermMap = std::map<Exponents, QCoeff>;

    /// Zero polynomial over no variables (assignment placeholder; absorbs
    /// into sums with any variable count).
    PolyRep() = default;
    /// Zero polynomial in n_variables variables.
    explicit PolyRep(int n_variables);

    /// The constant c.
    static PolyRep scalar(int n_variables, const QCoeff& c);
    /// The single variable z_i (1-based).
    static PolyRep variable(int n_variables, int i);
    /// c * z^exponents.
    static PolyRep monomial(int n_variables, Exponents exponents,
                            const QCoeff& c = QCoeff::one());

    int n_variables() const { return n_variables_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Coefficient of z^e (zero if absent).
    QCoeff coeff(const Exponents& e) const;
    /// Add c * z^e, dropping the term if it cancels.  Throws DegreeMismatch
    /// when e has the wrong length, PositionOutOfRange on negative entries.
    void add_term(const Exponents& e, const QCoeff& c);

    /// Largest total degree in the support (0 for the zero polynomial).
    int total_degree() const;

    PolyRep operator+(const PolyRep& o) const;
    PolyRep operator-(const PolyRep& o) const;
    PolyRep operator-() const;
    PolyRep& operator+=(const PolyRep& o);
    PolyRep& operator-=(const PolyRep& o);

    bool operator==(const PolyRep& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyRep& o) const { return !(*this == o); }

    /// Canonical text: terms in ascending exponent-lex order, each as
    /// "<coeff> * z1.z3^2" (factors with exponent 1 drop the caret, the
    /// empty monomial is "1"); zero is "0".
    std::string str() const;
    /// Parse the canonical text; also accepts bare monomials ("z1.z2^2"),
    /// bare coefficients, and '-' separators.  Throws ParseError.
    static PolyRep parse(int n_variables, const std::string& text);

private:
    int n_variables_ = 0;
    TermMap terms_;
};

PolyRep operator*(const QCoeff& c, const PolyRep& f);
/// Commutative polynomial product.
PolyRep operator*(const PolyRep& a, const PolyRep& b);

/// Coefficient scheme of a polynomial representation: under f2 the
/// coefficient of z^alpha is weighted by the multinomial constant of alpha;
/// under f1 it is a plain sum over all words with letter content alpha.
enum class RepScheme { f1, f2 };

/// Degree-diagonal dual-basis pairing <w, t>: sum over shared words of the
/// product of coefficients (terms of different degree pair to zero).
QCoeff pair(const DualElement& w, const TensorElement& t);

/// Symmetrized pairing <<w, t>>: for each homogeneous degree-n component of
/// t, n! times the pairing of w with the symmetrization fixpoint of the
/// component.
QCoeff pair_symmetrized(QsymEngine& engine, const DualElement& w,
                        const TensorElement& t,
                        ReductionScheme scheme = ReductionScheme::insertion_left);
QCoeff pair_symmetrized(const AlgebraSpec& spec, const DualElement& w,
                        const TensorElement& t);

/// The functional w_beta whose f2 representation is exactly the monomial
/// z^beta: of all solutions it is the one lying in the row space of the
/// degree-|beta| averaging projector, which makes it independent of the
/// internal solve.  Throws SingularSystem if the linear system degenerates
/// (cannot happen once dcp_check and diamond_check pass).
DualElement w_of_monomial(QsymEngine& engine, const Exponents& beta,
                          ReductionScheme scheme = ReductionScheme::insertion_left);
DualElement w_of_monomial(const AlgebraSpec& spec, const Exponents& beta);

/// Canonical lift of a polynomial: w_of_monomial applied termwise.
DualElement dual_of_poly(QsymEngine& engine, const PolyRep& f,
                         ReductionScheme scheme = ReductionScheme::insertion_left);

/// Polynomial representation of the functional w.  The coefficient of
/// z^alpha with |alpha| = n is, under f2, multinomial(alpha) times
/// <w, fixpoint(sorted word of alpha)>, and under f1 the sum of
/// <w, fixpoint(u)> over all words u with letter content alpha.
PolyRep f_rep(QsymEngine& engine, const DualElement& w,
              RepScheme scheme = RepScheme::f2,
              ReductionScheme rscheme = ReductionScheme::insertion_left);
PolyRep f_rep(const AlgebraSpec& spec, const DualElement& w,
              RepScheme scheme = RepScheme::f2);

/// One commutation rule of the dual algebra: Xi*.Xj* = q^exponent Xj*.Xi*
/// with i > j.
struct DualRelation {
    int i = 0;
    int j = 0;
    long exponent = 0;
    friend bool operator==(const DualRelation&, const DualRelation&) = default;
};

/// The dual algebra's commutation exponents for every generator pair i > j
/// (listed with i ascending, then j ascending), read off the transpose
/// kernel of the degree-2 projector.  Verifies that the kernel has dimension
/// N(N-1)/2 and is spanned by the two-term rules; throws NotQuasipolynomial
/// when a row pair fails to be proportional by a pure power of q or the
/// kernel dimension is wrong.
std::vector<DualRelation> dual_relations(QsymEngine& engine,
                                         ReductionScheme scheme = ReductionScheme::insertion_left);
std::vector<DualRelation> dual_relations(const AlgebraSpec& spec);

/// The ⋆ product of labelled representations: the representation of the
/// concatenation of the labels.
PolyRep star_product(QsymEngine& engine, const DualElement& w1,
                     const DualElement& w2, RepScheme scheme = RepScheme::f2,
                     ReductionScheme rscheme = ReductionScheme::insertion_left);
/// The ⋆ product of plain polynomials: both factors are first lifted
/// canonically via dual_of_poly, then multiplied by label concatenation.
PolyRep star_product(QsymEngine& engine, const PolyRep& f, const PolyRep& g,
                     RepScheme scheme = RepScheme::f2,
                     ReductionScheme rscheme = ReductionScheme::insertion_left);

} // namespace qdiff

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdiff/algebra.hpp"
#include "qdiff/dual.hpp"
#include "qdiff/matrix.hpp"
#include "qdiff/qsym.hpp"

namespace qdiff {

/// The exact substitution q -> q^{-1}.
QCoeff invert_q(const QCoeff& c);

/// If spec presents the quantum matrix algebra M_q(n) -- generators
/// X_{(i-1)n+j} = Z_{i,j} read row by row, with the standard same-row,
/// same-column, antidiagonal and diagonal relations -- returns n.  Only the
/// relations are compared; names are ignored.
std::optional<int> quantum_matrix_size(const AlgebraSpec& spec);

/// All exponent vectors over n_variables of total degree `degree`, in
/// ascending lexicographic order (the order PolyRep keeps its terms in).
std::vector<Exponents> monomials_of_degree(int n_variables, int degree);

/// Classical partial derivative d/dz_v (1-based variable index).
PolyRep z_derivative(const PolyRep& f, int v);

// ---------------------------------------------------------------------------
// Diagonal cell operators on polynomials over an n x n matrix of variables
// z_{i,j} = z_{(i-1)n+j}.  In the actions below, `a` stands for the
// z_{i,j}-exponent of the monomial acted on.
// ---------------------------------------------------------------------------

/// K_{i,j}^power in the lowering convention: multiplies each monomial by
/// q^{-power*a}.
PolyRep apply_k(int n, int i, int j, const PolyRep& f, long power = 1);

/// The raising operator for cell (i, j): each monomial maps to
///   -q^{2a-1} (1 - q^{-2a-2}) / (a+1) * z_{i,j} * (the monomial).
PolyRep apply_kcal(int n, int i, int j, const PolyRep& f);

/// The composite apply_kcal after apply_k twice: each monomial maps to
///   -q^{-1} (1 - q^{-2a-2}) / (a+1) * z_{i,j} * (the monomial).
PolyRep apply_o(int n, int i, int j, const PolyRep& f);

// ---------------------------------------------------------------------------
// Structured first-order operators: sums of factor strings.
// ---------------------------------------------------------------------------

/// One multiplicative factor of a structured operator, attached to a matrix
/// cell (i, j):
///  - partial: the classical derivative d/dz_{i,j};
///  - k: diagonal scaling of each monomial by q^{+power*a} where a is its
///    z_{i,j}-exponent (so power -1 matches apply_k with power +1);
///  - corner: monomial-wise  -q (1 - q^{-2a-2}) / (a+1) * z_{i,j} * (.),
///    which is apply_o rescaled by q^2 -- the normalization under which the
///    factored operators reproduce the degree-wise duality action.
struct OpFactor {
    enum class Kind { partial, k, corner };
    Kind kind = Kind::partial;
    int i = 0;
    int j = 0;
    long power = 1; ///< used by kind k only
    friend bool operator==(const OpFactor&, const OpFactor&) = default;
};

/// Composition of factors; the rightmost factor acts first.
using OpTerm = std::vector<OpFactor>;

/// Number of derivative factors in a term.
int derivative_order(const OpTerm& term);

/// A sum of factor compositions acting on polynomials in the n*n matrix
/// variables.
struct StructuredOp {
    int n = 0; ///< matrix size; polynomials must have n*n variables
    std::vector<OpTerm> terms;

    PolyRep apply(const PolyRep& f) const;
    /// Text form, e.g. "O[1,1] d[1,2] d[2,1] + K[1,2]^-1 K[2,1]^-1 d[2,2]".
    std::string str() const;
};

/// The structured form of the first-order quantized differential operator
/// attached to the matrix cell (i, j) of M_q(n): a sum over staircase paths of
/// corner, scaling and derivative factors.  Each path contributes one term;
/// the unique term of derivative order 1 is the hook term
/// prod_{s<i} K[s,j]^-1 prod_{y<j} K[i,y]^-1 d[i,j].  Throws WrongAlgebra
/// unless spec is a quantum matrix algebra, PositionOutOfRange for a bad
/// cell.
StructuredOp path_operator(const AlgebraSpec& spec, int i, int j);

// ---------------------------------------------------------------------------
// Duality-defined q-derivatives.
// ---------------------------------------------------------------------------

/// Derivative of f along generator g, defined through the dual pairing: f
/// is lifted termwise to canonical monomial functionals, each lift is
/// precomposed with X_g in the first tensor slot, and the result is
/// represented back as a polynomial in the requested scheme.  Computed with
/// a normal-form shortcut that agrees with q_derivative_by_pairing.
PolyRep q_derivative(const AlgebraSpec& spec, int g, const PolyRep& f,
                     RepScheme scheme = RepScheme::f2);

/// Same value computed literally from the symmetrization fixpoint and the
/// canonical lift; much slower, used to cross-check q_derivative.
PolyRep q_derivative_by_pairing(QsymEngine& engine, int g, const PolyRep& f,
                                RepScheme scheme = RepScheme::f2);

/// A quantized differential operator attached to one generator of an algebra,
/// held
/// as exact degree-wise matrices computed from the dual pairing, with an
/// optional structured factor form.  Matrices are cached per degree.
class QDiffOperator {
public:
    QDiffOperator(AlgebraSpec spec, int g);
    QDiffOperator(AlgebraSpec spec, int g, StructuredOp structured);

    const AlgebraSpec& algebra() const { return spec_; }
    int generator() const { return generator_; }
    const std::optional<StructuredOp>& structured_form() const {
        return structured_;
    }

    /// Apply through the duality action (shared normal-form cache).
    PolyRep apply(const PolyRep& f, RepScheme scheme = RepScheme::f2);

    /// Exact matrix of the degree-`degree` component: column c is the image
    /// of the c-th degree-`degree` monomial (ascending lexicographic
    /// order), expanded over the degree-(degree-1) monomials.
    QMatrix degree_matrix(int degree);

    /// Verifies that the duality action and the structured form agree on
    /// every monomial of degree 1..max_degree.  Throws std::logic_error
    /// when no structured form is attached.
    CheckReport agreement_check(int max_degree);

private:
    AlgebraSpec spec_;
    int generator_ = 0;
    std::optional<StructuredOp> structured_;
    NormalFormCache nf_cache_;
    std::map<int, QMatrix> matrices_;
};

/// Closed-form action of the four q-derivatives of M_q(2) on the monomial
/// z^beta, beta = (b1, b2, b3, b4):
///   g = 1:  b1 z^{beta-e1}
///   g = 2:  q^{-b1} b2 z^{beta-e2}
///   g = 3:  q^{-b1} b3 z^{beta-e3}
///   g = 4:  q^{-b2-b3} b4 z^{beta-e4}
///           - q (1 - q^{-2b1-2}) b2 b3 / (b1+1) z^{beta+e1-e2-e3}
/// Throws WrongAlgebra unless spec is M_q(2).
PolyRep mq2_closed_form(const AlgebraSpec& spec, int g, const Exponents& beta);

// ---------------------------------------------------------------------------
// Identity checks.  Reports list one line per failing item only; `passed`
// summarizes.
// ---------------------------------------------------------------------------

/// Verifies, on every monomial of degree <= max_degree over M_q(2), that
/// the q-wave operator  W = d1_q d4_q - q^{-1} d2_q d3_q
///  (a) equals the factored form  K_{1,2} K_{2,1} d1 d4 - q d2 d3  built
///      from classical derivatives,
///  (b) commutes with all four q-derivatives,
///  (c) takes the values W(z1 z4) = 1, W(z2 z3) = -q, and W f = 0 for
///      every f of degree below 2.
CheckReport wave_operator_check(const AlgebraSpec& spec, int max_degree);

/// First-order semiclassical bracket: every coefficient of the star
/// commutator f*g - g*f vanishes at q = 1; dividing by (q - 1) and then
/// evaluating at q = 1 coefficientwise gives the bracket.  Throws
/// NotVanishingAtOne if a commutator coefficient does not vanish at q = 1.
PolyRep poisson_bracket(QsymEngine& engine, const PolyRep& f,
                        const PolyRep& g);
PolyRep poisson_bracket(const AlgebraSpec& spec, const PolyRep& f,
                        const PolyRep& g);

/// Which covariant-derivative lift of d4_q on M_q(2) to verify.
enum class LiftVersion { af, bg };

/// Verifies componentwise the intertwining identity
///   (D + S) L(f) = L(d4_q f),   D = K_{1,2} K_{2,1} d/dz4,
/// where L is the column of lift components and S the superdiagonal shift:
///  - af: L_0 = id, L_{m+1} = L_m Ohat + [L_m, D] with
///    Ohat = corner(1,1) d2 d3, and the shift entries are 1.  The
///    commutation rule Ohat D = q^{-2} D Ohat is also verified, and is what
///    makes the components expressible as ordered words D^a Ohat^b.
///  - bg: L_m = K_{2,2}^{2m} (d2 d3)^m and the shift entries are
///    corner(1,1) K_{2,2}^{-2}.
/// All components beyond the reported truncation index are verified to
/// vanish on f.  Throws WrongAlgebra unless spec is M_q(2).
CheckReport covariant_lift_check(const AlgebraSpec& spec, LiftVersion version,
                                 const PolyRep& f);

/// Verifies on all monomials of degree <= max_degree that the four
/// q-derivatives of M_q(2) satisfy the defining relations of M_q(2) with q
/// replaced by q^{-1}, under the generator correspondence
/// d1 <-> Z_{1,1}, d2 <-> Z_{2,1}, d3 <-> Z_{1,2}, d4 <-> Z_{2,2}.
CheckReport opposite_relations_check(const AlgebraSpec& spec, int max_degree);

/// Verifies the normal-ordering identity that moves a bottom-row generator
/// Z_{n,i} across a single-row monomial Z_{a,1}^{c1} ... Z_{a,n}^{cn}
/// (row a < n):
///   Z_{n,i} Z_a^c = sum_{x<i} q (q^{-2 c_x} - 1) q^{-(c_{x+1}+...+c_{i-1})}
///                              Z_a^{c-e_x+e_i} Z_{n,x}
///                   + q^{-c_i} Z_a^c Z_{n,i}
/// as an identity of normal forms, for every row a, column i, and exponent
/// vector c of total degree <= max_degree.  Throws WrongAlgebra unless spec
/// is a quantum matrix algebra.
CheckReport reordering_identity_check(const AlgebraSpec& spec,
                                      int max_degree);

} // namespace qdiff

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qdiff/algebra.hpp"
#include "qdiff/matrix.hpp"

namespace qdiff {

/// Which adjacent-swap rule to lift: `full` keeps relation tails (each swap
/// is the identity modulo the relation ideal), `bar` drops them (the swaps
/// then generate an honest symmetric-group action on words up to scalars).
enum class SigmaVariant { full, bar };

/// Deterministic choice of reduced word for a permutation: repeated bubble
/// passes over the one-line notation scanning left-to-right or
/// right-to-left.  Both yield minimal-length words; they differ in which
/// braid-equivalent word they pick.
enum class ReductionScheme { insertion_left, insertion_right };

/// Apply the swap operator at tensor slots (position, position + 1),
/// 1-based, extended linearly.  For slot letters (a, b): descending pairs
/// a > b are rewritten via the defining relation to b_ab (b, a) plus (in the
/// full variant) the relation tail; ascending pairs via its inverse
/// b_ba^{-1}((b, a) minus tail); equal letters are fixed.  Throws
/// PositionOutOfRange when a word has no slot pair there, and
/// InhomogeneousAlgebra when tails are not uniformly quadratic.
TensorElement sigma_apply(const AlgebraSpec& spec, const TensorElement& t,
                          int position, SigmaVariant variant);

/// A reduced word i_1 .. i_r with sigma = s_{i_1} ... s_{i_r} as a product
/// of adjacent transpositions; sigma is given in one-line notation
/// (sigma[k-1] is the image of k).  Length always equals the inversion
/// count of sigma.
std::vector<int> reduced_word(const std::vector<int>& sigma,
                              ReductionScheme scheme);

/// All permutations of {1..n} in one-line notation, lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

/// The lifted operator of a reduced word: the composition of swap
/// operators, rightmost letter acting first.
TensorElement apply_reduced_word(const AlgebraSpec& spec,
                                 const std::vector<int>& word,
                                 const TensorElement& t, SigmaVariant variant);

/// Average of the lifted operators of all n! permutations on a homogeneous
/// degree-n element (DegreeMismatch otherwise).  With the bar variant this
/// is already an exact projection; with the full variant it is the map whose
/// iteration below stabilizes.
TensorElement p_average(const AlgebraSpec& spec, const TensorElement& t,
                        SigmaVariant variant = SigmaVariant::full,
                        ReductionScheme scheme = ReductionScheme::insertion_left);

/// Iterate p_average (full variant) until two consecutive iterates agree
/// exactly, and return the fixpoint.  The iteration cap is dim T^n = N^n;
/// exceeding it throws NoConvergence, which signals a presentation that
/// fails the scaling-compatibility or confluence checks.
TensorElement q_symmetrize(const AlgebraSpec& spec, const TensorElement& t,
                           ReductionScheme scheme = ReductionScheme::insertion_left);

/// Work cap for symmetrization machinery.  `force` lifts the caps.
struct Budget {
    int max_degree = 7;
    long max_dim = 1000000;
    bool force = false;
};

/// The symmetrization projector on T^degree as a dense exact matrix in the
/// word basis (all_words order): column j is the fixpoint image of the j-th
/// word.  iterations_to_fixpoint is the worst case over basis words.
struct Projector {
    AlgebraSpec algebra;
    int degree = 0;
    QMatrix matrix;
    long iterations_to_fixpoint = 0;
};

/// Text export: one line `row_word col_word coeff` per nonzero entry, rows
/// inner, columns outer, in word-basis order.
std::string projector_to_text(const Projector& p);

/// Memoizing driver for one algebra: per-word averaging passes, per-word
/// fixpoint columns, and dense projector matrices.  All results are pure
/// functions of (algebra, word, scheme); the memos are write-once and
/// thread-safe, so concurrent use may duplicate work but never observes
/// different values.
class QsymEngine {
public:
    explicit QsymEngine(AlgebraSpec spec, Budget budget = Budget{});

    const AlgebraSpec& spec() const { return spec_; }
    const Budget& budget() const { return budget_; }

    /// One full-variant averaging pass applied to a single word, memoized.
    TensorElement average_of_word(const Word& w, ReductionScheme scheme);
    /// Fixpoint column of a single word, memoized (NoConvergence as for
    /// q_symmetrize; DegreeBudgetExceeded outside the budget).
    TensorElement symmetrized_word(const Word& w, ReductionScheme scheme);
    /// Number of averaging passes until the fixpoint for w was reached.
    long iterations(const Word& w, ReductionScheme scheme);
    /// Linear extension of symmetrized_word to arbitrary elements (terms of
    /// different degrees are handled independently).
    TensorElement symmetrize(const TensorElement& t,
                             ReductionScheme scheme = ReductionScheme::insertion_left);
    /// The operator I_r (x) P_k (x) I_s: symmetrize the middle k letters of
    /// every term, leaving r prefix and s suffix letters fixed.  Every term
    /// must have degree exactly r + k + s (DegreeMismatch otherwise).
    TensorElement partial_symmetrize(int r, int k, int s,
                                     const TensorElement& t,
                                     ReductionScheme scheme = ReductionScheme::insertion_left);
    /// Dense projector matrix for one degree, cached.  Requires the degree
    /// within budget and the dimension small enough for a dense matrix.
    std::shared_ptr<const Projector> projector(
        int degree, ReductionScheme scheme = ReductionScheme::insertion_left);

private:
    using Key = std::pair<Word, int>;

    void check_budget(int degree) const;
    TensorElement average_of_element(const TensorElement& t,
                                     ReductionScheme scheme);

    AlgebraSpec spec_;
    Budget budget_;
    std::mutex mutex_;
    std::map<Key, TensorElement> avg_memo_;
    std::map<Key, std::pair<TensorElement, long>> fix_memo_;
    std::map<std::pair<int, int>, std::shared_ptr<const Projector>> projectors_;
};

/// Convenience wrapper: build the projector with a one-shot engine.
Projector projector_matrix(const AlgebraSpec& spec, int degree,
                           const Budget& budget = Budget{},
                           ReductionScheme scheme = ReductionScheme::insertion_left);

/// Verify, on every basis word of T^n, that symmetrizing the middle k
/// letters absorbs into the full projector (for the split n = r + k + s):
/// (I (x) P (x) I) . P = P and P . (I (x) P (x) I) = P.  Findings name each
/// violating basis word.
CheckReport star_identities_check(QsymEngine& engine, int n, int r, int k,
                                  int s,
                                  ReductionScheme scheme = ReductionScheme::insertion_left);
CheckReport star_identities_check(const AlgebraSpec& spec, int n, int r,
                                  int k, int s);

/// The q = 1 symmetrizer on T^degree over n_generators letters: the average
/// of all slot permutations, as a dense rational matrix in the word basis.
QMatrix classical_symmetrizer(int n_generators, int degree);

} // namespace qdiff

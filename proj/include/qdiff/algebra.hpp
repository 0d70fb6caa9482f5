#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qdiff/tensor.hpp"

namespace qdiff {

/// One triangular defining relation X_i X_j = q^alpha X_j X_i + tail,
/// for a pair i > j.  The tail is supported on normal-ordered words whose
/// letters are all below i.
struct Relation {
    int i = 0;
    int j = 0;
    long alpha = 0;     ///< the twist coefficient is q^alpha
    TensorElement tail; ///< may be zero
};

/// An exponent vector (e_1, ..., e_N) standing for the sorted monomial
/// X_1^{e_1} ... X_N^{e_N}.
using PBWMonomial = std::vector<int>;

/// Validated triangular presentation of a quadratic algebra on generators
/// X_1 < ... < X_N: one relation per pair i > j.  Immutable once built.
class AlgebraSpec {
public:
    /// Validate and build.  Exactly one relation per pair i > j is required
    /// (MissingRelation otherwise).  Tails must be normal-ordered with all
    /// letters below i, and homogeneous of degree 2 unless
    /// allow_inhomogeneous is set (lower-degree tail terms are then allowed
    /// for rewriting experiments only).
    static AlgebraSpec build(std::string name, int n_generators,
                             std::vector<Relation> relations,
                             std::vector<std::string> generator_names = {},
                             bool allow_inhomogeneous = false);

    const std::string& name() const { return name_; }
    int n_generators() const { return n_; }
    /// Optional display names (empty, or one per generator).
    const std::vector<std::string>& generator_names() const {
        return gen_names_;
    }
    /// true when every tail is homogeneous of degree 2, which is what all
    /// symmetrization machinery requires.
    bool homogeneous() const { return homogeneous_; }

    /// Relations sorted by (i, j) ascending.
    const std::vector<Relation>& relations() const { return relations_; }
    const Relation& relation(int i, int j) const;
    long alpha(int i, int j) const { return relation(i, j).alpha; }
    /// q^{alpha_ij}.
    QCoeff b(int i, int j) const;
    const TensorElement& tail(int i, int j) const {
        return relation(i, j).tail;
    }

    /// The ideal element q^{alpha} X_j X_i + tail − X_i X_j whose vanishing
    /// in the quotient expresses the relation (the reducible word carries
    /// coefficient −1).
    TensorElement relation_element(int i, int j) const;

    /// Canonical `.qalg` text.
    std::string to_qalg() const;
    /// Parse `.qalg` text; throws ParseError with line/column, or
    /// MissingRelation if a pair has no relation line.
    static AlgebraSpec parse_qalg(const std::string& text,
                                  bool allow_inhomogeneous = false);

private:
    std::string name_;
    int n_ = 0;
    std::vector<std::string> gen_names_;
    std::vector<Relation> relations_;
    std::map<std::pair<int, int>, size_t> index_;
    bool homogeneous_ = true;
};

/// Thread-safe memo of word normal forms for one spec.  Sharing a cache
/// across calls never changes results, only speed.
class NormalFormCache {
public:
    /// Returns the cached normal form of w, or nullptr.
    const TensorElement* lookup(const Word& w) const;
    /// Stores the normal form of w (first write wins).
    void store(const Word& w, const TensorElement& nf);

private:
    mutable std::mutex mutex_;
    std::map<Word, TensorElement, DegreeLexLess> memo_;
};

/// Rewrite t to its normal form: the unique representative supported on
/// sorted words, equal to t modulo the relation ideal.  Deterministic
/// leftmost-innermost strategy; terminates because every step strictly
/// decreases the graded word order.
TensorElement normal_form(const AlgebraSpec& spec, const TensorElement& t,
                          NormalFormCache* cache = nullptr);

/// Report of a validation pass: failures (if any) as canonical text lines.
struct CheckReport {
    bool passed = true;
    std::vector<std::string> findings;
};

/// For each generator i, applies the scaling X_j -> q^{alpha_ij} X_j to
/// every defining relation among the generators below i and verifies the
/// image still normal-forms to zero.  Lists every failing (i, relation).
CheckReport dcp_check(const AlgebraSpec& spec);

/// For every word X_i X_j X_k, resolves the overlap by reducing the left
/// pair first and the right pair first and comparing normal forms.  Lists
/// every unresolved ambiguity with both normal forms and the difference.
CheckReport diamond_check(const AlgebraSpec& spec);

/// All degree-`degree` exponent vectors in lexicographic order;
/// binomial(N + degree - 1, degree) of them.
std::vector<PBWMonomial> pbw_basis(const AlgebraSpec& spec, int degree);

} // namespace qdiff

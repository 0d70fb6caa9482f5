#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdiff/qcoeff.hpp"

namespace qdiff {

/// A word over the generator alphabet: a sequence of 1-based generator
/// indices.  The empty word is the unit of degree 0.
using Word = std::vector<int>;

/// Letter-count vector (n_1, ..., n_N) of a word.
std::vector<int> letter_counts(const Word& w, int n_generators);

/// Number of out-of-order pairs: positions s < t with w[s] > w[t].
long misordering_index(const Word& w);

/// The nondecreasing rearrangement of a word.
Word sorted_word(const Word& w);

/// The nondecreasing word with the given letter counts.
Word word_of_counts(const std::vector<int>& counts);

/// All words of the given degree over n_generators letters, in plain
/// lexicographic order (N^degree of them).
std::vector<Word> all_words(int n_generators, int degree);

/// All nondecreasing words of the given degree, in lexicographic order
/// (binomial(N + degree - 1, degree) of them).
std::vector<Word> all_sorted_words(int n_generators, int degree);

/// Number of words sharing the letter counts: |counts|! / prod(counts_i!).
Rational multinomial(const std::vector<int>& counts);

/// Result of comparing two words of equal degree in the graded order.
enum class WordOrder { less, equal, greater, incomparable };

/// Compare words of equal length.  First the letter-count vectors are
/// compared: at the highest-index letter where the counts differ, the word
/// with more copies is the bigger one (so X_N^r is the biggest count class).
/// Ties are broken by the misordering index.  Distinct words that tie on
/// both counts and misordering index are incomparable.
/// Throws DegreeMismatch if the lengths differ.
WordOrder order_compare(const Word& a, const Word& b);

/// Total order used for storage and display: by degree, then plain
/// lexicographic comparison of letter sequences.
struct DegreeLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Finitely supported QCoeff-linear combination of words; the elements of
/// the free tensor algebra as data.  Zero coefficients are never stored.
class TensorElement {
public:
    using TermMap = std::map<Word, QCoeff, DegreeLexLess>;

    /// Zero.
    TensorElement() = default;

    /// A single word with the given coefficient.
    static TensorElement from_word(Word w, QCoeff c = QCoeff::one());
    /// A scalar multiple of the empty word.
    static TensorElement scalar(QCoeff c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Coefficient of a word (zero if absent).
    QCoeff coeff(const Word& w) const;
    /// Add c * w to this element, dropping the term if it cancels.
    void add_term(const Word& w, const QCoeff& c);

    /// Restriction to words of length n.
    TensorElement graded_component(size_t n) const;
    /// Largest word length in the support (0 for the zero element).
    size_t max_degree() const;
    /// The common word length, if every term has the same one; nullopt for
    /// the zero element.
    std::optional<size_t> homogeneous_degree() const;

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    /// Canonical text form: terms in (degree, plain-lex) order, each as
    /// "<coeff> * Xi.Xj...", the empty word shown as "1"; zero is "0".
    std::string str() const;
    /// Parse the canonical text form; also accepts a bare word ("X4.X1"),
    /// a bare coefficient, and coefficient-less word terms.
    static TensorElement parse(const std::string& text);

private:
    TermMap terms_;
};

/// Bilinear extension of word concatenation (the tensor product).
TensorElement concat(const TensorElement& a, const TensorElement& b);

TensorElement operator*(const QCoeff& c, const TensorElement& t);
/// operator form of concat.
TensorElement operator*(const TensorElement& a, const TensorElement& b);

/// Render one word: "1" for the empty word, else "X1.X4" style.
std::string word_str(const Word& w);
/// Parse one word (bare form); throws ParseError.
Word parse_word(const std::string& text);

} // namespace qdiff

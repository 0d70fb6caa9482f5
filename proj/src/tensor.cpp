#include "qdiff/tensor.hpp"

#include <algorithm>

#include "qdiff/text.hpp"

namespace qdiff {
namespace {

int parse_generator(TextCursor& cur) {
    cur.skip_ws();
    if (!cur.try_consume('X')) cur.fail("expected generator 'X<index>'");
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected generator index after 'X'");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        v = v * 10 + (cur.advance() - '0');
        if (v > 1000000) cur.fail("generator index out of range");
    }
    if (v < 1) cur.fail("generator index must be at least 1");
    return static_cast<int>(v);
}

/// word := '1' | 'X' int ('.' 'X' int)*
Word parse_word_prefix(TextCursor& cur) {
    cur.skip_ws();
    if (cur.peek() == '1') {
        cur.advance();
        return Word{};
    }
    Word w;
    w.push_back(parse_generator(cur));
    for (;;) {
        const size_t save = cur.pos();
        cur.skip_ws();
        if (!cur.try_consume('.')) {
            cur.seek(save);
            break;
        }
        w.push_back(parse_generator(cur));
    }
    return w;
}

} // namespace

std::vector<int> letter_counts(const Word& w, int n_generators) {
    std::vector<int> counts(static_cast<size_t>(n_generators), 0);
    for (int letter : w) {
        if (letter >= 1 && letter <= n_generators) ++counts[letter - 1];
    }
    return counts;
}

long misordering_index(const Word& w) {
    long inv = 0;
    for (size_t s = 0; s < w.size(); ++s)
        for (size_t t = s + 1; t < w.size(); ++t)
            if (w[s] > w[t]) ++inv;
    return inv;
}

Word sorted_word(const Word& w) {
    Word s = w;
    std::sort(s.begin(), s.end());
    return s;
}

Word word_of_counts(const std::vector<int>& counts) {
    Word w;
    for (size_t i = 0; i < counts.size(); ++i)
        for (int k = 0; k < counts[i]; ++k) w.push_back(static_cast<int>(i) + 1);
    return w;
}

std::vector<Word> all_words(int n_generators, int degree) {
    std::vector<Word> out;
    Word w(static_cast<size_t>(degree), 1);
    if (degree == 0) {
        out.push_back(Word{});
        return out;
    }
    for (;;) {
        out.push_back(w);
        int pos = degree - 1;
        while (pos >= 0 && w[pos] == n_generators) {
            w[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

std::vector<Word> all_sorted_words(int n_generators, int degree) {
    std::vector<Word> out;
    if (degree == 0) {
        out.push_back(Word{});
        return out;
    }
    Word w(static_cast<size_t>(degree), 1);
    for (;;) {
        out.push_back(w);
        int pos = degree - 1;
        while (pos >= 0 && w[pos] == n_generators) --pos;
        if (pos < 0) break;
        const int v = w[pos] + 1;
        for (int k = pos; k < degree; ++k) w[k] = v;
    }
    return out;
}

Rational multinomial(const std::vector<int>& counts) {
    long total = 0;
    for (int c : counts) total += c;
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(total));
    mpz_class denominator = 1;
    for (int c : counts) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(c));
        denominator *= f;
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

WordOrder order_compare(const Word& a, const Word& b) {
    if (a.size() != b.size())
        throw DegreeMismatch("order_compare on words of lengths " +
                             std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    if (a == b) return WordOrder::equal;
    int top = 0;
    for (int letter : a) top = std::max(top, letter);
    for (int letter : b) top = std::max(top, letter);
    const std::vector<int> ca = letter_counts(a, top);
    const std::vector<int> cb = letter_counts(b, top);
    for (int i = top - 1; i >= 0; --i) {
        if (ca[i] != cb[i])
            return ca[i] < cb[i] ? WordOrder::less : WordOrder::greater;
    }
    const long ia = misordering_index(a);
    const long ib = misordering_index(b);
    if (ia != ib) return ia < ib ? WordOrder::less : WordOrder::greater;
    return WordOrder::incomparable;
}

TensorElement TensorElement::from_word(Word w, QCoeff c) {
    TensorElement t;
    t.add_term(w, c);
    return t;
}

TensorElement TensorElement::scalar(QCoeff c) {
    return from_word(Word{}, std::move(c));
}

QCoeff TensorElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QCoeff::zero() : it->second;
}

void TensorElement::add_term(const Word& w, const QCoeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorElement TensorElement::graded_component(size_t n) const {
    TensorElement out;
    for (const auto& [w, c] : terms_)
        if (w.size() == n) out.terms_.emplace(w, c);
    return out;
}

size_t TensorElement::max_degree() const {
    size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
}

std::optional<size_t> TensorElement::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const size_t d = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != d) return std::nullopt;
    return d;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement out = *this;
    out += o;
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement out = *this;
    out -= o;
    return out;
}

TensorElement TensorElement::operator-() const {
    TensorElement out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += c.str();
        s += " * ";
        s += word_str(w);
    }
    return s;
}

TensorElement TensorElement::parse(const std::string& text) {
    TextCursor cur(text);
    TensorElement out;
    Rational sign(1);
    // A bare "0" is the zero element (the canonical text of zero).
    cur.skip_ws();
    const size_t at_start = cur.pos();
    if (cur.try_consume('0')) {
        cur.skip_ws();
        if (cur.at_end()) return out;
        cur.seek(at_start);
    }
    for (;;) {
        // One term: either "<coeff> ['*' word]" or a (possibly signed) bare
        // word.  Signed coefficients are part of the coefficient grammar, so
        // the sign here only multiplies what the separator dictates.
        QCoeff c = QCoeff::one();
        Word w;
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
                w = parse_word_prefix(cur);
            } else {
                cur.seek(after_coeff);
            }
        } else {
            cur.skip_ws();
            if (cur.try_consume('-'))
                c = -c;
            else
                cur.try_consume('+');
            w = parse_word_prefix(cur);
        }
        out.add_term(w, QCoeff::from_rational(sign) * c);

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

TensorElement concat(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

TensorElement operator*(const QCoeff& c, const TensorElement& t) {
    TensorElement out;
    for (const auto& [w, tc] : t.terms()) out.add_term(w, c * tc);
    return out;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    return concat(a, b);
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += 'X';
        s += std::to_string(w[i]);
    }
    return s;
}

Word parse_word(const std::string& text) {
    TextCursor cur(text);
    const Word w = parse_word_prefix(cur);
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return w;
}

} // namespace qdiff

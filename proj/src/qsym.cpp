#include "qdiff/qsym.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qdiff {
namespace {

/// N^degree with saturation, the dimension of the degree-`degree` slice.
long dimension_of(int n_generators, int degree) {
    const int base = std::max(n_generators, 1);
    long dim = 1;
    for (int i = 0; i < degree; ++i) {
        if (dim > std::numeric_limits<long>::max() / base)
            return std::numeric_limits<long>::max();
        dim *= base;
    }
    return dim;
}

/// Index of a word in all_words(n_generators, |w|) order.
long word_index(const Word& w, int n_generators) {
    long idx = 0;
    for (int letter : w) idx = idx * n_generators + (letter - 1);
    return idx;
}

/// Reduced words for all of S_n under one scheme, cached (write-once).
const std::vector<std::vector<int>>& reduced_words_for(int n,
                                                       ReductionScheme scheme) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    const std::pair<int, int> key{n, static_cast<int>(scheme)};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> words;
    for (const auto& perm : all_permutations(n))
        words.push_back(reduced_word(perm, scheme));
    return cache.emplace(key, std::move(words)).first->second;
}

} // namespace

TensorElement sigma_apply(const AlgebraSpec& spec, const TensorElement& t,
                          int position, SigmaVariant variant) {
    if (position < 1)
        throw PositionOutOfRange("swap position " + std::to_string(position) +
                                 " is not positive");
    if (!spec.homogeneous())
        throw InhomogeneousAlgebra(
            "swap operators need uniformly quadratic tails; '" + spec.name() +
            "' has lower-degree tail terms");
    const size_t p = static_cast<size_t>(position - 1);
    TensorElement out;
    for (const auto& [w, c] : t.terms()) {
        if (w.size() < p + 2)
            throw PositionOutOfRange("word " + word_str(w) +
                                     " has no slot pair at position " +
                                     std::to_string(position));
        const int a = w[p];
        const int b = w[p + 1];
        if (a == b) {
            out.add_term(w, c);
            continue;
        }
        const bool descending = a > b;
        const Relation& rel =
            spec.relation(descending ? a : b, descending ? b : a);
        Word swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        if (descending) {
            out.add_term(swapped, c * spec.b(rel.i, rel.j));
            if (variant == SigmaVariant::full) {
                for (const auto& [tw, tc] : rel.tail.terms()) {
                    Word sub = w;
                    sub[p] = tw[0];
                    sub[p + 1] = tw[1];
                    out.add_term(sub, c * tc);
                }
            }
        } else {
            const QCoeff binv = spec.b(rel.i, rel.j).inverse();
            out.add_term(swapped, c * binv);
            if (variant == SigmaVariant::full) {
                for (const auto& [tw, tc] : rel.tail.terms()) {
                    Word sub = w;
                    sub[p] = tw[0];
                    sub[p + 1] = tw[1];
                    out.add_term(sub, -(c * binv * tc));
                }
            }
        }
    }
    return out;
}

std::vector<int> reduced_word(const std::vector<int>& sigma,
                              ReductionScheme scheme) {
    const int n = static_cast<int>(sigma.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument(
                "one-line notation is not a permutation of 1..n");
        seen[static_cast<size_t>(v - 1)] = 1;
    }
    std::vector<int> line = sigma;
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        if (scheme == ReductionScheme::insertion_left) {
            for (int i = 0; i + 1 < n; ++i) {
                if (line[static_cast<size_t>(i)] > line[static_cast<size_t>(i + 1)]) {
                    std::swap(line[static_cast<size_t>(i)],
                              line[static_cast<size_t>(i + 1)]);
                    swaps.push_back(i + 1);
                    moved = true;
                }
            }
        } else {
            for (int i = n - 2; i >= 0; --i) {
                if (line[static_cast<size_t>(i)] > line[static_cast<size_t>(i + 1)]) {
                    std::swap(line[static_cast<size_t>(i)],
                              line[static_cast<size_t>(i + 1)]);
                    swaps.push_back(i + 1);
                    moved = true;
                }
            }
        }
    }
    // The recorded swaps multiply sigma to the identity on the right, so the
    // factorization of sigma itself reads them in reverse.
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::vector<std::vector<int>> all_permutations(int n) {
    if (n < 0) throw std::invalid_argument("negative symmetric-group degree");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

TensorElement apply_reduced_word(const AlgebraSpec& spec,
                                 const std::vector<int>& word,
                                 const TensorElement& t,
                                 SigmaVariant variant) {
    TensorElement cur = t;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = sigma_apply(spec, cur, *it, variant);
    return cur;
}

TensorElement p_average(const AlgebraSpec& spec, const TensorElement& t,
                        SigmaVariant variant, ReductionScheme scheme) {
    if (t.is_zero()) return t;
    const auto deg = t.homogeneous_degree();
    if (!deg)
        throw DegreeMismatch("averaging requires a homogeneous element");
    const int n = static_cast<int>(*deg);
    if (n <= 1) return t;
    TensorElement sum;
    Rational count(0);
    if (n <= 9) {
        for (const auto& rw : reduced_words_for(n, scheme)) {
            sum += apply_reduced_word(spec, rw, t, variant);
            count += 1;
        }
    } else {
        // Beyond 9 letters the reduced-word table would dwarf the payload;
        // stream the permutations instead.
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            sum += apply_reduced_word(spec, reduced_word(perm, scheme), t,
                                      variant);
            count += 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    const Rational inv = Rational(1) / count;
    TensorElement out;
    for (const auto& [w, c] : sum.terms()) out.add_term(w, inv * c);
    return out;
}

TensorElement q_symmetrize(const AlgebraSpec& spec, const TensorElement& t,
                           ReductionScheme scheme) {
    if (t.is_zero()) return t;
    const auto deg = t.homogeneous_degree();
    if (!deg)
        throw DegreeMismatch("q_symmetrize requires a homogeneous element");
    const long cap = dimension_of(spec.n_generators(), static_cast<int>(*deg));
    TensorElement cur = t;
    long steps = 0;
    for (;;) {
        TensorElement next = p_average(spec, cur, SigmaVariant::full, scheme);
        if (next == cur) return cur;
        cur = std::move(next);
        if (++steps > cap)
            throw NoConvergence(
                "averaging did not stabilize within " + std::to_string(cap) +
                " passes; the presentation likely fails dcp_check or "
                "diamond_check");
    }
}

QsymEngine::QsymEngine(AlgebraSpec spec, Budget budget)
    : spec_(std::move(spec)), budget_(budget) {}

void QsymEngine::check_budget(int degree) const {
    if (budget_.force) return;
    if (degree > budget_.max_degree)
        throw DegreeBudgetExceeded(
            "degree " + std::to_string(degree) + " exceeds the cap " +
            std::to_string(budget_.max_degree) + " (set force to override)");
    const long dim = dimension_of(spec_.n_generators(), degree);
    if (dim > budget_.max_dim)
        throw DegreeBudgetExceeded(
            "T^" + std::to_string(degree) + " has dimension " +
            std::to_string(dim) + ", over the cap " +
            std::to_string(budget_.max_dim) + " (set force to override)");
}

TensorElement QsymEngine::average_of_word(const Word& w,
                                          ReductionScheme scheme) {
    const Key key{w, static_cast<int>(scheme)};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = avg_memo_.find(key);
        if (it != avg_memo_.end()) return it->second;
    }
    check_budget(static_cast<int>(w.size()));
    TensorElement result = p_average(spec_, TensorElement::from_word(w),
                                     SigmaVariant::full, scheme);
    std::lock_guard<std::mutex> lock(mutex_);
    return avg_memo_.emplace(key, std::move(result)).first->second;
}

TensorElement QsymEngine::average_of_element(const TensorElement& t,
                                             ReductionScheme scheme) {
    TensorElement out;
    for (const auto& [w, c] : t.terms()) {
        const TensorElement col = average_of_word(w, scheme);
        for (const auto& [u, uc] : col.terms()) out.add_term(u, c * uc);
    }
    return out;
}

TensorElement QsymEngine::symmetrized_word(const Word& w,
                                           ReductionScheme scheme) {
    const Key key{w, static_cast<int>(scheme)};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = fix_memo_.find(key);
        if (it != fix_memo_.end()) return it->second.first;
    }
    check_budget(static_cast<int>(w.size()));
    const long cap =
        dimension_of(spec_.n_generators(), static_cast<int>(w.size()));
    TensorElement cur = TensorElement::from_word(w);
    long steps = 0;
    for (;;) {
        TensorElement next = average_of_element(cur, scheme);
        if (next == cur) break;
        cur = std::move(next);
        if (++steps > cap)
            throw NoConvergence(
                "averaging of " + word_str(w) + " did not stabilize within " +
                std::to_string(cap) +
                " passes; the presentation likely fails dcp_check or "
                "diamond_check");
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return fix_memo_.emplace(key, std::make_pair(std::move(cur), steps))
        .first->second.first;
}

long QsymEngine::iterations(const Word& w, ReductionScheme scheme) {
    symmetrized_word(w, scheme);
    std::lock_guard<std::mutex> lock(mutex_);
    return fix_memo_.at(Key{w, static_cast<int>(scheme)}).second;
}

TensorElement QsymEngine::symmetrize(const TensorElement& t,
                                     ReductionScheme scheme) {
    TensorElement out;
    for (const auto& [w, c] : t.terms()) {
        const TensorElement col = symmetrized_word(w, scheme);
        for (const auto& [u, uc] : col.terms()) out.add_term(u, c * uc);
    }
    return out;
}

TensorElement QsymEngine::partial_symmetrize(int r, int k, int s,
                                             const TensorElement& t,
                                             ReductionScheme scheme) {
    if (r < 0 || k < 0 || s < 0)
        throw DegreeMismatch("negative component in split (" +
                             std::to_string(r) + "," + std::to_string(k) +
                             "," + std::to_string(s) + ")");
    const size_t n = static_cast<size_t>(r + k + s);
    TensorElement out;
    for (const auto& [w, c] : t.terms()) {
        if (w.size() != n)
            throw DegreeMismatch("word " + word_str(w) +
                                 " does not match the split degree " +
                                 std::to_string(r + k + s));
        const Word middle(w.begin() + r, w.begin() + r + k);
        const TensorElement col = symmetrized_word(middle, scheme);
        for (const auto& [m, mc] : col.terms()) {
            Word full(w.begin(), w.begin() + r);
            full.insert(full.end(), m.begin(), m.end());
            full.insert(full.end(), w.begin() + r + k, w.end());
            out.add_term(full, c * mc);
        }
    }
    return out;
}

std::shared_ptr<const Projector> QsymEngine::projector(int degree,
                                                       ReductionScheme scheme) {
    const std::pair<int, int> key{degree, static_cast<int>(scheme)};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = projectors_.find(key);
        if (it != projectors_.end()) return it->second;
    }
    check_budget(degree);
    const long dim = dimension_of(spec_.n_generators(), degree);
    if (!budget_.force && dim > 1500)
        throw DegreeBudgetExceeded(
            "dense projector of dimension " + std::to_string(dim) +
            " refused (set force to override)");
    const std::vector<Word> words = all_words(spec_.n_generators(), degree);
    auto proj = std::make_shared<Projector>();
    proj->algebra = spec_;
    proj->degree = degree;
    proj->matrix = QMatrix(dim, dim);
    long worst = 0;
    for (long j = 0; j < dim; ++j) {
        const TensorElement col =
            symmetrized_word(words[static_cast<size_t>(j)], scheme);
        worst = std::max(worst,
                         iterations(words[static_cast<size_t>(j)], scheme));
        for (const auto& [u, c] : col.terms())
            proj->matrix(word_index(u, spec_.n_generators()), j) = c;
    }
    proj->iterations_to_fixpoint = worst;
    std::lock_guard<std::mutex> lock(mutex_);
    return projectors_.emplace(key, std::move(proj)).first->second;
}

Projector projector_matrix(const AlgebraSpec& spec, int degree,
                           const Budget& budget, ReductionScheme scheme) {
    QsymEngine engine(spec, budget);
    return *engine.projector(degree, scheme);
}

std::string projector_to_text(const Projector& p) {
    const std::vector<Word> words =
        all_words(p.algebra.n_generators(), p.degree);
    std::string out;
    for (long c = 0; c < p.matrix.cols(); ++c) {
        for (long r = 0; r < p.matrix.rows(); ++r) {
            const QCoeff& e = p.matrix(r, c);
            if (e.is_zero()) continue;
            out += word_str(words[static_cast<size_t>(r)]);
            out += ' ';
            out += word_str(words[static_cast<size_t>(c)]);
            out += ' ';
            out += e.str();
            out += '\n';
        }
    }
    return out;
}

CheckReport star_identities_check(QsymEngine& engine, int n, int r, int k,
                                  int s, ReductionScheme scheme) {
    if (r < 0 || k < 0 || s < 0 || r + k + s != n)
        throw DegreeMismatch("split (" + std::to_string(r) + "," +
                             std::to_string(k) + "," + std::to_string(s) +
                             ") does not sum to degree " + std::to_string(n));
    const std::string split = "(" + std::to_string(r) + "," +
                              std::to_string(k) + "," + std::to_string(s) +
                              ")";
    CheckReport report;
    for (const Word& w : all_words(engine.spec().n_generators(), n)) {
        const TensorElement target = engine.symmetrized_word(w, scheme);
        if (engine.partial_symmetrize(r, k, s, target, scheme) != target) {
            report.passed = false;
            report.findings.push_back("split " + split +
                                      ": (IxPxI).P != P at basis word " +
                                      word_str(w));
        }
        const TensorElement other = engine.symmetrize(
            engine.partial_symmetrize(r, k, s, TensorElement::from_word(w),
                                      scheme),
            scheme);
        if (other != target) {
            report.passed = false;
            report.findings.push_back("split " + split +
                                      ": P.(IxPxI) != P at basis word " +
                                      word_str(w));
        }
    }
    return report;
}

CheckReport star_identities_check(const AlgebraSpec& spec, int n, int r,
                                  int k, int s) {
    QsymEngine engine(spec);
    return star_identities_check(engine, n, r, k, s);
}

QMatrix classical_symmetrizer(int n_generators, int degree) {
    const long dim = dimension_of(n_generators, degree);
    const std::vector<Word> words = all_words(n_generators, degree);
    const auto perms = all_permutations(degree);
    const QCoeff share = QCoeff::from_rational(
        Rational(1) / Rational(static_cast<long>(perms.size())));
    QMatrix m(dim, dim);
    for (long j = 0; j < dim; ++j) {
        const Word& w = words[static_cast<size_t>(j)];
        for (const auto& perm : perms) {
            Word img(w.size());
            for (size_t pos = 0; pos < w.size(); ++pos)
                img[pos] = w[static_cast<size_t>(perm[pos] - 1)];
            m(word_index(img, n_generators), j) += share;
        }
    }
    return m;
}

} // namespace qdiff

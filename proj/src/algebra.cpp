#include "qdiff/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "qdiff/text.hpp"

namespace qdiff {
namespace {

void check_tail_word(const Word& w, int i, int n_generators,
                     bool allow_inhomogeneous, const std::string& where) {
    if (w.size() > 2)
        throw QdiffError(where + ": tail word of degree " +
                         std::to_string(w.size()) + " exceeds 2");
    if (w.size() != 2 && !allow_inhomogeneous)
        throw QdiffError(where + ": tail must be homogeneous of degree 2");
    for (int letter : w) {
        if (letter < 1 || letter > n_generators)
            throw QdiffError(where + ": tail letter " + std::to_string(letter) +
                             " out of range");
        if (letter >= i)
            throw QdiffError(where + ": tail letter " + std::to_string(letter) +
                             " is not below " + std::to_string(i));
    }
    if (w.size() == 2 && w[0] > w[1])
        throw QdiffError(where + ": tail word X" + std::to_string(w[0]) + ".X" +
                         std::to_string(w[1]) + " is not normal-ordered");
}

void check_letters(const Word& w, int n_generators) {
    for (int letter : w)
        if (letter < 1 || letter > n_generators)
            throw QdiffError("word " + word_str(w) + " uses generator index " +
                             std::to_string(letter) + ", outside 1.." +
                             std::to_string(n_generators));
}

/// Shared driver for one normal-form computation.  Memoizes per word; an
/// optional shared cache is consulted first and fed afterwards.
class NormalFormWorker {
public:
    NormalFormWorker(const AlgebraSpec& spec, NormalFormCache* shared)
        : spec_(spec), shared_(shared) {}

    TensorElement run(const TensorElement& t) {
        TensorElement out;
        for (const auto& [w, c] : t.terms()) {
            check_letters(w, spec_.n_generators());
            out += c * word_nf(w);
        }
        return out;
    }

private:
    TensorElement word_nf(const Word& w) {
        size_t pos = w.size();
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] > w[k + 1]) {
                pos = k;
                break;
            }
        }
        if (pos == w.size()) return TensorElement::from_word(w);

        if (auto it = local_.find(w); it != local_.end()) return it->second;
        if (shared_ != nullptr) {
            if (const TensorElement* hit = shared_->lookup(w)) {
                local_.emplace(w, *hit);
                return *hit;
            }
        }

        const Relation& rel = spec_.relation(w[pos], w[pos + 1]);
        TensorElement replacement =
            TensorElement::from_word({rel.j, rel.i}, spec_.b(rel.i, rel.j));
        replacement += rel.tail;

        TensorElement out;
        for (const auto& [rw, rc] : replacement.terms()) {
            Word full(w.begin(), w.begin() + pos);
            full.insert(full.end(), rw.begin(), rw.end());
            full.insert(full.end(), w.begin() + pos + 2, w.end());
            // Every step must strictly descend in the graded word order;
            // lower-degree words (inhomogeneous tails) descend trivially.
            assert(full.size() != w.size() ||
                   order_compare(full, w) == WordOrder::less);
            out += rc * word_nf(full);
        }
        local_.emplace(w, out);
        if (shared_ != nullptr) shared_->store(w, out);
        return out;
    }

    const AlgebraSpec& spec_;
    NormalFormCache* shared_;
    std::map<Word, TensorElement, DegreeLexLess> local_;
};

/// Word with the relation applied once at position pos, or the word itself
/// if the adjacent pair there is already ordered.
TensorElement reduce_once(const AlgebraSpec& spec, const Word& w, size_t pos) {
    if (pos + 1 >= w.size() || w[pos] <= w[pos + 1])
        return TensorElement::from_word(w);
    const Relation& rel = spec.relation(w[pos], w[pos + 1]);
    TensorElement replacement =
        TensorElement::from_word({rel.j, rel.i}, spec.b(rel.i, rel.j));
    replacement += rel.tail;
    TensorElement out;
    for (const auto& [rw, rc] : replacement.terms()) {
        Word full(w.begin(), w.begin() + pos);
        full.insert(full.end(), rw.begin(), rw.end());
        full.insert(full.end(), w.begin() + pos + 2, w.end());
        out.add_term(full, rc);
    }
    return out;
}

} // namespace

AlgebraSpec AlgebraSpec::build(std::string name, int n_generators,
                               std::vector<Relation> relations,
                               std::vector<std::string> generator_names,
                               bool allow_inhomogeneous) {
    if (n_generators < 1)
        throw QdiffError("algebra needs at least one generator");
    if (!generator_names.empty() &&
        generator_names.size() != static_cast<size_t>(n_generators))
        throw QdiffError("expected " + std::to_string(n_generators) +
                         " generator names, got " +
                         std::to_string(generator_names.size()));

    AlgebraSpec spec;
    spec.name_ = std::move(name);
    spec.n_ = n_generators;
    spec.gen_names_ = std::move(generator_names);

    std::sort(relations.begin(), relations.end(),
              [](const Relation& a, const Relation& b) {
                  return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
              });
    for (const Relation& rel : relations) {
        const std::string where =
            "relation (" + std::to_string(rel.i) + "," + std::to_string(rel.j) +
            ")";
        if (rel.j < 1 || rel.i > n_generators || rel.i <= rel.j)
            throw QdiffError(where + ": indices must satisfy N >= i > j >= 1");
        for (const auto& [w, c] : rel.tail.terms()) {
            check_tail_word(w, rel.i, n_generators, allow_inhomogeneous, where);
            if (w.size() != 2) spec.homogeneous_ = false;
        }
        auto [it, fresh] = spec.index_.emplace(std::make_pair(rel.i, rel.j),
                                               spec.relations_.size());
        if (!fresh) throw QdiffError("duplicate " + where);
        spec.relations_.push_back(rel);
    }
    for (int i = 2; i <= n_generators; ++i) {
        for (int j = 1; j < i; ++j) {
            if (spec.index_.count(std::make_pair(i, j)) == 0)
                throw MissingRelation("no relation for pair (" +
                                      std::to_string(i) + "," +
                                      std::to_string(j) + ")");
        }
    }
    return spec;
}

const Relation& AlgebraSpec::relation(int i, int j) const {
    auto it = index_.find(std::make_pair(i, j));
    if (it == index_.end())
        throw MissingRelation("no relation for pair (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
    return relations_[it->second];
}

QCoeff AlgebraSpec::b(int i, int j) const {
    return QCoeff::q_power(alpha(i, j));
}

TensorElement AlgebraSpec::relation_element(int i, int j) const {
    const Relation& rel = relation(i, j);
    TensorElement el = TensorElement::from_word({j, i}, b(i, j));
    el += rel.tail;
    el.add_term({i, j}, -QCoeff::one());
    return el;
}

std::string AlgebraSpec::to_qalg() const {
    std::string out = "qalg 1\n";
    out += "name " + name_ + "\n";
    out += "gens " + std::to_string(n_) + "\n";
    if (!gen_names_.empty()) {
        out += "names";
        for (const auto& gn : gen_names_) out += " " + gn;
        out += "\n";
    }
    for (const Relation& rel : relations_) {
        out += "rel " + std::to_string(rel.i) + " " + std::to_string(rel.j) +
               " : 1q^" + std::to_string(rel.alpha) + " ;";
        bool first = true;
        for (const auto& [w, c] : rel.tail.terms()) {
            out += first ? " " : ", ";
            first = false;
            out += c.str();
            if (!w.empty()) {
                out += " *";
                for (int letter : w) out += " " + std::to_string(letter);
            }
        }
        out += "\n";
    }
    return out;
}

namespace {

long parse_line_int(TextCursor& cur) {
    cur.skip_ws();
    std::string digits;
    if (cur.peek() == '-') digits += cur.advance();
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(cur.peek())))
        digits += cur.advance();
    return std::stol(digits);
}

Relation parse_rel_line(const std::string& line, int n_generators,
                        bool allow_inhomogeneous) {
    TextCursor cur(line);
    cur.skip_ws();
    if (!cur.try_consume(std::string("rel"))) cur.fail("expected 'rel'");
    Relation rel;
    rel.i = static_cast<int>(parse_line_int(cur));
    rel.j = static_cast<int>(parse_line_int(cur));
    if (rel.j < 1 || rel.i > n_generators || rel.i <= rel.j)
        cur.fail("relation indices must satisfy N >= i > j >= 1");
    cur.skip_ws();
    cur.expect(':', "':' before the twist coefficient");
    const QCoeff b = QCoeff::parse_prefix(cur);
    const auto power = b.as_q_power();
    if (!power) cur.fail("twist coefficient must be a single term 1q^<int>");
    rel.alpha = *power;
    cur.skip_ws();
    if (cur.at_end()) return rel;
    cur.expect(';', "';' before the tail");
    cur.skip_ws();
    if (cur.at_end()) return rel;
    for (;;) {
        const QCoeff c = QCoeff::parse_prefix(cur);
        Word w;
        cur.skip_ws();
        if (cur.try_consume('*')) {
            w.push_back(static_cast<int>(parse_line_int(cur)));
            const size_t save = cur.pos();
            cur.skip_ws();
            if (std::isdigit(static_cast<unsigned char>(cur.peek())) ||
                cur.peek() == '-') {
                w.push_back(static_cast<int>(parse_line_int(cur)));
            } else {
                cur.seek(save);
            }
        }
        try {
            check_tail_word(w, rel.i, n_generators, allow_inhomogeneous,
                            "tail term");
        } catch (const QdiffError& e) {
            cur.fail(e.what());
        }
        rel.tail.add_term(w, c);
        cur.skip_ws();
        if (cur.at_end()) break;
        cur.expect(',', "',' between tail terms");
    }
    return rel;
}

} // namespace

AlgebraSpec AlgebraSpec::parse_qalg(const std::string& text,
                                    bool allow_inhomogeneous) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool saw_header = false;
    std::string name;
    int n_generators = -1;
    std::vector<std::string> gen_names;
    std::vector<Relation> relations;

    auto fail = [&](const std::string& msg, int col) {
        throw ParseError(msg, line_no, col);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (const size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream tokens(line);
        std::string keyword;
        if (!(tokens >> keyword)) continue;

        if (!saw_header) {
            if (keyword != "qalg") fail("expected 'qalg 1' header", 1);
            std::string version;
            if (!(tokens >> version) || version != "1")
                fail("unsupported qalg version", 6);
            std::string extra;
            if (tokens >> extra) fail("unexpected trailing input", 1);
            saw_header = true;
            continue;
        }
        if (keyword == "name") {
            if (!(tokens >> name)) fail("missing algebra name", 1);
            std::string extra;
            if (tokens >> extra) fail("algebra name must be a single token", 1);
        } else if (keyword == "gens") {
            if (!(tokens >> n_generators) || n_generators < 1)
                fail("gens needs a positive integer", 1);
        } else if (keyword == "names") {
            if (n_generators < 0) fail("'names' must come after 'gens'", 1);
            std::string token;
            while (tokens >> token) gen_names.push_back(token);
            if (gen_names.size() != static_cast<size_t>(n_generators))
                fail("expected " + std::to_string(n_generators) +
                         " generator names",
                     1);
        } else if (keyword == "rel") {
            if (n_generators < 0) fail("'rel' must come after 'gens'", 1);
            try {
                relations.push_back(
                    parse_rel_line(line, n_generators, allow_inhomogeneous));
            } catch (const ParseError& e) {
                fail(e.raw_message(), e.col());
            }
            for (size_t k = 0; k + 1 < relations.size(); ++k) {
                if (relations[k].i == relations.back().i &&
                    relations[k].j == relations.back().j)
                    fail("duplicate relation (" +
                             std::to_string(relations.back().i) + "," +
                             std::to_string(relations.back().j) + ")",
                         1);
            }
        } else {
            fail("unknown directive '" + keyword + "'", 1);
        }
    }
    if (!saw_header) throw ParseError("empty algebra file", 1, 1);
    if (name.empty()) throw ParseError("missing 'name' line", line_no, 1);
    if (n_generators < 0) throw ParseError("missing 'gens' line", line_no, 1);
    return build(name, n_generators, std::move(relations), std::move(gen_names),
                 allow_inhomogeneous);
}

const TensorElement* NormalFormCache::lookup(const Word& w) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(w);
    return it == memo_.end() ? nullptr : &it->second;
}

void NormalFormCache::store(const Word& w, const TensorElement& nf) {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(w, nf);
}

TensorElement normal_form(const AlgebraSpec& spec, const TensorElement& t,
                          NormalFormCache* cache) {
    NormalFormWorker worker(spec, cache);
    return worker.run(t);
}

CheckReport dcp_check(const AlgebraSpec& spec) {
    CheckReport report;
    NormalFormCache cache;
    for (int i = 2; i <= spec.n_generators(); ++i) {
        for (const Relation& rel : spec.relations()) {
            if (rel.i >= i) continue; // only relations among X_1..X_{i-1}
            TensorElement image;
            const TensorElement rel_el = spec.relation_element(rel.i, rel.j);
            for (const auto& [w, c] : rel_el.terms()) {
                long scale = 0;
                for (int letter : w) scale += spec.alpha(i, letter);
                image.add_term(w, c * QCoeff::q_power(scale));
            }
            const TensorElement residue = normal_form(spec, image, &cache);
            if (!residue.is_zero()) {
                report.passed = false;
                report.findings.push_back(
                    "sigma_" + std::to_string(i) + " applied to relation (" +
                    std::to_string(rel.i) + "," + std::to_string(rel.j) +
                    ") leaves residue " + residue.str());
            }
        }
    }
    return report;
}

CheckReport diamond_check(const AlgebraSpec& spec) {
    CheckReport report;
    NormalFormCache cache;
    const int n = spec.n_generators();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
                const Word w{i, j, k};
                const TensorElement left =
                    normal_form(spec, reduce_once(spec, w, 0), &cache);
                const TensorElement right =
                    normal_form(spec, reduce_once(spec, w, 1), &cache);
                if (left != right) {
                    report.passed = false;
                    report.findings.push_back(
                        "ambiguity " + word_str(w) + ": left-first " +
                        left.str() + "; right-first " + right.str() +
                        "; difference " + (left - right).str());
                }
            }
        }
    }
    return report;
}

namespace {

void enumerate_exponents(int remaining_slots, int remaining_degree,
                         PBWMonomial& current,
                         std::vector<PBWMonomial>& out) {
    if (remaining_slots == 1) {
        current.push_back(remaining_degree);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = 0; e <= remaining_degree; ++e) {
        current.push_back(e);
        enumerate_exponents(remaining_slots - 1, remaining_degree - e, current,
                            out);
        current.pop_back();
    }
}

} // namespace

std::vector<PBWMonomial> pbw_basis(const AlgebraSpec& spec, int degree) {
    std::vector<PBWMonomial> out;
    PBWMonomial current;
    enumerate_exponents(spec.n_generators(), degree, current, out);
    return out;
}

} // namespace qdiff

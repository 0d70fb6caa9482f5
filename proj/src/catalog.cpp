#include "qdiff/catalog.hpp"

namespace qdiff {
namespace {

QCoeff lp(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms)
        if (c != 0) p.emplace(e, Rational(c));
    return QCoeff::from_laurent(p);
}

AlgebraSpec make_aiii(int n) {
    const int N = n * n;
    auto idx = [n](int r, int c) { return (r - 1) * n + c; };
    std::vector<std::string> names;
    std::vector<Relation> rels;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            names.push_back("Z" + std::to_string(r) + "_" + std::to_string(c));
    for (int r2 = 1; r2 <= n; ++r2) {
        for (int c2 = 1; c2 <= n; ++c2) {
            for (int r1 = 1; r1 <= n; ++r1) {
                for (int c1 = 1; c1 <= n; ++c1) {
                    const int u = idx(r1, c1);
                    const int v = idx(r2, c2);
                    if (v <= u) continue;
                    Relation rel;
                    rel.i = v;
                    rel.j = u;
                    if (r1 == r2 || c1 == c2) {
                        rel.alpha = -1;
                    } else {
                        rel.alpha = 0;
                        if (r1 < r2 && c1 < c2) {
                            // Cross term from the same-2x2-block relation.
                            rel.tail.add_term(
                                {idx(r1, c2), idx(r2, c1)},
                                -q_lambda());
                        }
                    }
                    rels.push_back(std::move(rel));
                }
            }
        }
    }
    return AlgebraSpec::build("aiii(" + std::to_string(n) + ")", N,
                              std::move(rels), std::move(names));
}

AlgebraSpec make_ci(int n) {
    // Generators W_{a,b}, a <= b, in lexicographic order.
    std::vector<std::pair<int, int>> gens;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) gens.emplace_back(a, b);
    const int N = static_cast<int>(gens.size());
    auto idx = [&gens](int a, int b) {
        for (size_t k = 0; k < gens.size(); ++k)
            if (gens[k] == std::make_pair(a, b)) return static_cast<int>(k) + 1;
        throw QdiffError("bad ci generator index");
    };
    std::vector<std::string> names;
    for (const auto& [a, b] : gens)
        names.push_back("W" + std::to_string(a) + "_" + std::to_string(b));

    const QCoeff one_tail = QCoeff::quotient(
        LaurentPoly{{2, Rational(1)}, {0, Rational(-1)}},
        LaurentPoly{{1, Rational(1)}, {-1, Rational(1)}}); // (q^2-1)/(q+q^-1)
    const QCoeff q2_minus_1 = lp({{2, 1}, {0, -1}});
    const QCoeff q2_minus_qm2 = lp({{2, 1}, {-2, -1}});
    const QCoeff lambda = q_lambda();

    std::vector<Relation> rels;
    for (int vi = 2; vi <= N; ++vi) {
        for (int ui = 1; ui < vi; ++ui) {
            const auto [a, b] = gens[ui - 1];
            const auto [c, d] = gens[vi - 1];
            Relation rel;
            rel.i = vi;
            rel.j = ui;
            if (a == c) {
                rel.alpha = (b == a) ? 2 : 1;
            } else if (b == c && c == d) {
                rel.alpha = 2;
            } else if (b == c) {
                rel.alpha = 1;
                rel.tail.add_term({idx(a, d), idx(b, b)}, q2_minus_qm2);
            } else if (b == d) {
                rel.alpha = 1;
            } else if (b < c) {
                rel.alpha = 0;
                if (a == b && c == d) {
                    rel.tail.add_term({idx(a, c), idx(a, c)}, one_tail);
                } else if (a == b) {
                    rel.tail.add_term({idx(a, c), idx(a, d)}, q2_minus_1);
                } else if (c == d) {
                    rel.tail.add_term({idx(a, c), idx(b, c)}, q2_minus_1);
                } else {
                    rel.tail.add_term({idx(a, c), idx(b, d)}, lambda);
                }
            } else if (b < d) {
                rel.alpha = 0;
                rel.tail.add_term({idx(a, d), idx(c, b)}, lambda);
            } else {
                rel.alpha = 0;
            }
            rels.push_back(std::move(rel));
        }
    }
    return AlgebraSpec::build("ci(" + std::to_string(n) + ")", N,
                              std::move(rels), std::move(names));
}

AlgebraSpec make_fq(int big_n) {
    // Generator order: z_0,..,z_{N-1}, z*_{N-1},..,z*_0.
    const int N = 2 * big_n;
    std::vector<std::string> names;
    for (int i = 0; i < big_n; ++i) names.push_back("z" + std::to_string(i));
    for (int i = big_n - 1; i >= 0; --i)
        names.push_back("zs" + std::to_string(i));
    // plain index of z_i is i+1; of z*_i is 2N' - i for N' = big_n.
    auto z = [](int i) { return i + 1; };
    auto zs = [N](int i) { return N - i; };

    const QCoeff tail_coeff = lp({{2, -1}, {0, 1}}); // -(q^2 - 1)
    std::vector<Relation> rels;
    for (int vi = 2; vi <= N; ++vi) {
        for (int ui = 1; ui < vi; ++ui) {
            Relation rel;
            rel.i = vi;
            rel.j = ui;
            const bool u_star = ui > big_n;
            const bool v_star = vi > big_n;
            const int u_idx = u_star ? N - ui : ui - 1;
            const int v_idx = v_star ? N - vi : vi - 1;
            if (!u_star && v_star && u_idx == v_idx) {
                rel.alpha = 0;
                for (int k = u_idx + 1; k < big_n; ++k)
                    rel.tail.add_term({z(k), zs(k)}, tail_coeff);
            } else {
                rel.alpha = 1;
            }
            rels.push_back(std::move(rel));
        }
    }
    return AlgebraSpec::build("fq(" + std::to_string(big_n) + ")", N,
                              std::move(rels), std::move(names));
}

AlgebraSpec make_quantum_plane() {
    Relation rel;
    rel.i = 2;
    rel.j = 1;
    rel.alpha = -1;
    return AlgebraSpec::build("quantum_plane", 2, {rel}, {"A", "B"});
}

AlgebraSpec make_symmetric(int N) {
    std::vector<Relation> rels;
    std::vector<std::string> names;
    for (int i = 1; i <= N; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 2; i <= N; ++i) {
        for (int j = 1; j < i; ++j) {
            Relation rel;
            rel.i = i;
            rel.j = j;
            rel.alpha = 0;
            rels.push_back(rel);
        }
    }
    return AlgebraSpec::build("symmetric(" + std::to_string(N) + ")", N,
                              std::move(rels), std::move(names));
}

} // namespace

std::string family_to_string(Family f) {
    switch (f) {
        case Family::aiii: return "aiii";
        case Family::ci: return "ci";
        case Family::fq: return "fq";
        case Family::quantum_plane: return "quantum_plane";
        case Family::symmetric: return "symmetric";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "aiii") return Family::aiii;
    if (s == "ci") return Family::ci;
    if (s == "fq") return Family::fq;
    if (s == "quantum_plane") return Family::quantum_plane;
    if (s == "symmetric") return Family::symmetric;
    return std::nullopt;
}

AlgebraSpec make_family(const FamilyId& id) {
    if (id.param < 1)
        throw QdiffError("family parameter must be at least 1");
    switch (id.family) {
        case Family::aiii: return make_aiii(id.param);
        case Family::ci: return make_ci(id.param);
        case Family::fq: return make_fq(id.param);
        case Family::quantum_plane: return make_quantum_plane();
        case Family::symmetric: return make_symmetric(id.param);
    }
    throw QdiffError("unknown family");
}

} // namespace qdiff

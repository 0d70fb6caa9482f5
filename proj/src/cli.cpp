#include "qdiff/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qdiff/algebra.hpp"
#include "qdiff/catalog.hpp"
#include "qdiff/diffop.hpp"
#include "qdiff/dual.hpp"
#include "qdiff/errors.hpp"
#include "qdiff/qsym.hpp"
#include "qdiff/tensor.hpp"

namespace qdiff {
namespace {

std::string read_stream(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

AlgebraSpec load_spec(const std::string& path, std::istream& in,
                      bool allow_inhomogeneous = false) {
    std::string text;
    if (path == "-") {
        text = read_stream(in);
    } else {
        std::ifstream file(path);
        if (!file)
            throw QdiffError("cannot open spec file '" + path + "'");
        text = read_stream(file);
    }
    return AlgebraSpec::parse_qalg(text, allow_inhomogeneous);
}

/// Work cap shared with the symmetrization engine: degree at most 7 and at
/// most 10^6 basis words, unless lifted explicitly.
void guard_degree(int n_generators, int degree, bool force) {
    if (force) return;
    if (degree > 7)
        throw DegreeBudgetExceeded(
            "degree " + std::to_string(degree) +
            " exceeds the work cap of 7 (rerun with --force to override)");
    long double dim = 1;
    for (int i = 0; i < degree; ++i) dim *= n_generators;
    if (dim > 1e6L)
        throw DegreeBudgetExceeded(
            "basis of " + std::to_string(n_generators) + "^" +
            std::to_string(degree) +
            " words exceeds the work cap of 10^6 (rerun with --force to "
            "override)");
}

void ensure_letters(const TensorElement& t, int n_generators) {
    for (const auto& [w, c] : t.terms())
        for (int x : w)
            if (x < 1 || x > n_generators)
                throw PositionOutOfRange(
                    "generator X" + std::to_string(x) + " outside 1.." +
                    std::to_string(n_generators));
}

Rational parse_rational(const std::string& text) {
    Rational r;
    try {
        r = Rational(text);
    } catch (const std::invalid_argument&) {
        throw QdiffError("--q-at expects a rational such as 3/2, got '" +
                         text + "'");
    }
    if (r.get_den() == 0) throw QdiffError("--q-at denominator is zero");
    r.canonicalize();
    if (r == 0) throw QdiffError("--q-at requires a nonzero value");
    return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

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

std::string tensor_at(const TensorElement& t, const Rational& r) {
    std::string s;
    bool first = true;
    for (const auto& [w, c] : t.terms()) {
        const Rational v = c.eval_at(r);
        if (v == 0) continue;
        if (!first) s += " + ";
        first = false;
        s += rational_str(v) + " * " + word_str(w);
    }
    return first ? "0" : s;
}

std::string poly_at(const PolyRep& f, const Rational& r) {
    std::string s;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        const Rational v = c.eval_at(r);
        if (v == 0) continue;
        if (!first) s += " + ";
        first = false;
        s += rational_str(v) + " * " + monomial_str(e);
    }
    return first ? "0" : s;
}

void print_eval_line(std::ostream& out, const std::optional<Rational>& at,
                     const std::string& evaluated) {
    if (at) out << "at q=" << rational_str(*at) << ": " << evaluated << "\n";
}

void print_check(std::ostream& out, const std::string& label,
                 const CheckReport& rep, int& checks, int& failures) {
    ++checks;
    out << label << ": " << (rep.passed ? "PASS" : "FAIL") << "\n";
    if (!rep.passed) {
        ++failures;
        for (const std::string& f : rep.findings) out << "  " << f << "\n";
    }
}

// ---------------------------------------------------------------- suites --

void run_stars_suite(QsymEngine& engine, int max_degree, std::ostream& out,
                     int& checks, int& failures) {
    for (int n = 2; n <= max_degree; ++n)
        for (int r = 0; r <= n; ++r)
            for (int k = 0; r + k <= n; ++k) {
                const int s = n - r - k;
                const CheckReport rep =
                    star_identities_check(engine, n, r, k, s);
                print_check(out,
                            "stars n=" + std::to_string(n) + " split=(" +
                                std::to_string(r) + "," + std::to_string(k) +
                                "," + std::to_string(s) + ")",
                            rep, checks, failures);
            }
}

void run_braid_suite(QsymEngine& engine, int max_degree, std::ostream& out,
                     int& checks, int& failures) {
    const AlgebraSpec& spec = engine.spec();
    const int N = spec.n_generators();
    for (int n = 2; n <= max_degree; ++n) {
        const std::vector<Word> words = all_words(N, n);
        CheckReport involution, braid, distant, fixpoint;
        for (const Word& w : words) {
            const TensorElement t = TensorElement::from_word(w);
            for (int i = 1; i + 1 <= n; ++i) {
                const TensorElement once =
                    sigma_apply(spec, t, i, SigmaVariant::bar);
                if (sigma_apply(spec, once, i, SigmaVariant::bar) != t) {
                    involution.passed = false;
                    involution.findings.push_back(
                        "position " + std::to_string(i) + " at " +
                        word_str(w));
                }
            }
            for (int i = 1; i + 2 <= n; ++i) {
                const TensorElement lhs = sigma_apply(
                    spec,
                    sigma_apply(spec,
                                sigma_apply(spec, t, i, SigmaVariant::bar),
                                i + 1, SigmaVariant::bar),
                    i, SigmaVariant::bar);
                const TensorElement rhs = sigma_apply(
                    spec,
                    sigma_apply(spec,
                                sigma_apply(spec, t, i + 1,
                                            SigmaVariant::bar),
                                i, SigmaVariant::bar),
                    i + 1, SigmaVariant::bar);
                if (lhs != rhs) {
                    braid.passed = false;
                    braid.findings.push_back("positions (" +
                                             std::to_string(i) + "," +
                                             std::to_string(i + 1) +
                                             ") at " + word_str(w));
                }
            }
            for (int i = 1; i + 1 <= n; ++i)
                for (int j = i + 2; j + 1 <= n; ++j) {
                    const TensorElement lhs = sigma_apply(
                        spec, sigma_apply(spec, t, j, SigmaVariant::bar), i,
                        SigmaVariant::bar);
                    const TensorElement rhs = sigma_apply(
                        spec, sigma_apply(spec, t, i, SigmaVariant::bar), j,
                        SigmaVariant::bar);
                    if (lhs != rhs) {
                        distant.passed = false;
                        distant.findings.push_back(
                            "positions (" + std::to_string(i) + "," +
                            std::to_string(j) + ") at " + word_str(w));
                    }
                }
            if (engine.symmetrized_word(w, ReductionScheme::insertion_left) !=
                engine.symmetrized_word(w, ReductionScheme::insertion_right)) {
                fixpoint.passed = false;
                fixpoint.findings.push_back(word_str(w));
            }
        }
        const std::string size =
            " (" + std::to_string(words.size()) + " words)";
        print_check(out, "braid involution n=" + std::to_string(n) + size,
                    involution, checks, failures);
        if (n >= 3)
            print_check(out, "braid relation n=" + std::to_string(n) + size,
                        braid, checks, failures);
        if (n >= 4)
            print_check(out,
                        "braid distant-commutation n=" + std::to_string(n) +
                            size,
                        distant, checks, failures);
        print_check(out,
                    "fixpoint scheme-independence n=" + std::to_string(n) +
                        size,
                    fixpoint, checks, failures);
    }
}

void run_closed_forms_suite(const AlgebraSpec& spec, int max_degree,
                            std::ostream& out, int& checks, int& failures) {
    std::vector<std::unique_ptr<QDiffOperator>> ops;
    for (int g = 1; g <= 4; ++g)
        ops.push_back(std::make_unique<QDiffOperator>(spec, g));
    for (int d = 0; d <= max_degree; ++d) {
        CheckReport rep;
        const std::vector<Exponents> monomials = monomials_of_degree(4, d);
        for (const Exponents& beta : monomials)
            for (int g = 1; g <= 4; ++g)
                if (ops[static_cast<size_t>(g - 1)]->apply(
                        PolyRep::monomial(4, beta)) !=
                    mq2_closed_form(spec, g, beta)) {
                    rep.passed = false;
                    rep.findings.push_back("generator " + std::to_string(g) +
                                           " at " + monomial_str(beta));
                }
        print_check(out,
                    "closed-forms degree=" + std::to_string(d) + " (" +
                        std::to_string(monomials.size()) +
                        " monomials x 4 generators)",
                    rep, checks, failures);
    }
}

void run_paths_suite(const AlgebraSpec& spec, int size, int max_degree,
                     std::ostream& out, int& checks, int& failures) {
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) {
            QDiffOperator op(spec, (i - 1) * size + j,
                             path_operator(spec, i, j));
            const CheckReport rep = op.agreement_check(max_degree);
            print_check(out,
                        "paths cell=(" + std::to_string(i) + "," +
                            std::to_string(j) + ") degree<=" +
                            std::to_string(max_degree),
                        rep, checks, failures);
        }
}

void run_opposite_suite(const AlgebraSpec& spec, int max_degree,
                        std::ostream& out, int& checks, int& failures) {
    print_check(out,
                "opposite-relations degree<=" + std::to_string(max_degree),
                opposite_relations_check(spec, max_degree), checks, failures);
}

void run_lifts_suite(const AlgebraSpec& spec, int max_degree,
                     std::ostream& out, int& checks, int& failures) {
    for (const LiftVersion version : {LiftVersion::af, LiftVersion::bg}) {
        const std::string name = version == LiftVersion::af ? "AF" : "BG";
        for (int d = 0; d <= max_degree; ++d) {
            CheckReport rep;
            const std::vector<Exponents> monomials =
                monomials_of_degree(4, d);
            for (const Exponents& beta : monomials) {
                const CheckReport one = covariant_lift_check(
                    spec, version, PolyRep::monomial(4, beta));
                if (!one.passed) {
                    rep.passed = false;
                    for (const std::string& f : one.findings)
                        rep.findings.push_back(monomial_str(beta) + ": " + f);
                }
            }
            print_check(out,
                        "lifts " + name + " degree=" + std::to_string(d) +
                            " (" + std::to_string(monomials.size()) +
                            " monomials)",
                        rep, checks, failures);
        }
    }
}

int do_verify(const AlgebraSpec& spec, const std::string& suite,
              int max_degree, bool force, std::ostream& out) {
    guard_degree(spec.n_generators(), max_degree, force);
    Budget budget;
    budget.force = force;
    QsymEngine engine(spec, budget);
    const std::optional<int> qms = quantum_matrix_size(spec);
    const bool all = suite == "all";
    int checks = 0, failures = 0;

    if (all || suite == "stars")
        run_stars_suite(engine, max_degree, out, checks, failures);
    if (all || suite == "braid")
        run_braid_suite(engine, max_degree, out, checks, failures);

    if (suite == "closed-forms" && qms != 2)
        throw WrongAlgebra("suite closed-forms needs the 2x2 quantum matrix "
                           "algebra");
    if (suite == "paths" && !qms)
        throw WrongAlgebra("suite paths needs a quantum matrix algebra");
    if (suite == "opposite-relations" && qms != 2)
        throw WrongAlgebra("suite opposite-relations needs the 2x2 quantum "
                           "matrix algebra");
    if (suite == "lifts" && qms != 2)
        throw WrongAlgebra("suite lifts needs the 2x2 quantum matrix "
                           "algebra");

    if (all || suite == "closed-forms") {
        if (qms == 2)
            run_closed_forms_suite(spec, max_degree, out, checks, failures);
        else
            out << "closed-forms: SKIP (needs the 2x2 quantum matrix "
                   "algebra)\n";
    }
    if (all || suite == "paths") {
        if (qms)
            run_paths_suite(spec, *qms, max_degree, out, checks, failures);
        else
            out << "paths: SKIP (needs a quantum matrix algebra)\n";
    }
    if (all || suite == "opposite-relations") {
        if (qms == 2)
            run_opposite_suite(spec, max_degree, out, checks, failures);
        else
            out << "opposite-relations: SKIP (needs the 2x2 quantum matrix "
                   "algebra)\n";
    }
    if (all || suite == "lifts") {
        if (qms == 2)
            run_lifts_suite(spec, max_degree, out, checks, failures);
        else
            out << "lifts: SKIP (needs the 2x2 quantum matrix algebra)\n";
    }

    out << "verify: " << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int run_qdiff(const std::vector<std::string>& args, std::istream& in,
              std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-symmetrization, star products, and quantized "
                 "differential operators"};
    app.name("qdiff");
    app.require_subcommand(1);

    int max_degree = 4;
    std::string scheme_name = "f2";
    std::string q_at_text;
    bool force = false;
    app.add_option("--max-degree", max_degree,
                   "largest degree that sweeps and checks cover")
        ->capture_default_str();
    app.add_option("--scheme", scheme_name,
                   "polynomial representation scheme")
        ->check(CLI::IsMember({"f1", "f2"}))
        ->capture_default_str();
    app.add_option("--q-at", q_at_text,
                   "also print results with q evaluated at this rational");
    app.add_flag("--force", force, "lift the degree/dimension work caps");

    std::string spec_path, expr_a, expr_b, lift_name, family_name;
    std::string suite = "all";
    int generator = 0, cell_i = 0, cell_j = 0, family_param = 1;
    std::function<int()> action;

    const auto scheme = [&] {
        return scheme_name == "f1" ? RepScheme::f1 : RepScheme::f2;
    };
    const auto q_at = [&]() -> std::optional<Rational> {
        if (q_at_text.empty()) return std::nullopt;
        return parse_rational(q_at_text);
    };
    const auto spec_arg = [&](CLI::App* sub) {
        sub->add_option("spec", spec_path,
                        ".qalg presentation file, or - for standard input")
            ->required();
        sub->fallthrough();
    };

    CLI::App* c_check = app.add_subcommand(
        "check", "validate scaling compatibility and rewriting confluence");
    spec_arg(c_check);
    c_check->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in, true);
            int checks = 0, failures = 0;
            print_check(out, "dcp", dcp_check(spec), checks, failures);
            print_check(out, "diamond", diamond_check(spec), checks,
                        failures);
            return failures == 0 ? 0 : 1;
        };
    });

    CLI::App* c_nf = app.add_subcommand(
        "normal-form", "rewrite a tensor expression to its normal form");
    spec_arg(c_nf);
    c_nf->add_option("expr", expr_a, "tensor expression, e.g. \"X4.X1\"")
        ->required();
    c_nf->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in, true);
            const TensorElement t = TensorElement::parse(expr_a);
            ensure_letters(t, spec.n_generators());
            const TensorElement nf = normal_form(spec, t);
            out << nf.str() << "\n";
            if (const auto at = q_at())
                print_eval_line(out, at, tensor_at(nf, *at));
            return 0;
        };
    });

    CLI::App* c_qsym = app.add_subcommand(
        "qsym", "apply the symmetrization fixpoint to a tensor expression");
    spec_arg(c_qsym);
    c_qsym->add_option("expr", expr_a, "tensor expression, e.g. \"X2.X1\"")
        ->required();
    c_qsym->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            const TensorElement t = TensorElement::parse(expr_a);
            ensure_letters(t, spec.n_generators());
            Budget budget;
            budget.force = force;
            QsymEngine engine(spec, budget);
            const TensorElement result = engine.symmetrize(t);
            out << result.str() << "\n";
            if (const auto at = q_at())
                print_eval_line(out, at, tensor_at(result, *at));
            return 0;
        };
    });

    CLI::App* c_pair = app.add_subcommand(
        "pair", "symmetrized dual pairing of two tensor expressions");
    spec_arg(c_pair);
    c_pair->add_option("dual", expr_a, "dual-side tensor expression")
        ->required();
    c_pair->add_option("element", expr_b, "algebra-side tensor expression")
        ->required();
    c_pair->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            const TensorElement w = TensorElement::parse(expr_a);
            const TensorElement t = TensorElement::parse(expr_b);
            ensure_letters(w, spec.n_generators());
            ensure_letters(t, spec.n_generators());
            Budget budget;
            budget.force = force;
            QsymEngine engine(spec, budget);
            const QCoeff value = pair_symmetrized(engine, w, t);
            out << value.str() << "\n";
            if (const auto at = q_at())
                print_eval_line(out, at, rational_str(value.eval_at(*at)));
            return 0;
        };
    });

    CLI::App* c_star = app.add_subcommand(
        "star", "star product of two polynomials in the dual variables");
    spec_arg(c_star);
    c_star->add_option("f", expr_a, "left polynomial, e.g. \"z2.z1\"")
        ->required();
    c_star->add_option("g", expr_b, "right polynomial")->required();
    c_star->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            const int N = spec.n_generators();
            const PolyRep f = PolyRep::parse(N, expr_a);
            const PolyRep g = PolyRep::parse(N, expr_b);
            Budget budget;
            budget.force = force;
            QsymEngine engine(spec, budget);
            const PolyRep product = star_product(engine, f, g, scheme());
            out << product.str() << "\n";
            if (const auto at = q_at())
                print_eval_line(out, at, poly_at(product, *at));
            return 0;
        };
    });

    CLI::App* c_dual = app.add_subcommand(
        "dual-relations", "commutation rules of the dual generators");
    spec_arg(c_dual);
    c_dual->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            Budget budget;
            budget.force = force;
            QsymEngine engine(spec, budget);
            const std::vector<DualRelation> rels = dual_relations(engine);
            for (const DualRelation& r : rels)
                out << "X" << r.i << "*.X" << r.j << "* = q^" << r.exponent
                    << " X" << r.j << "*.X" << r.i << "*\n";
            return 0;
        };
    });

    CLI::App* c_derive = app.add_subcommand(
        "derive", "apply the q-derivative of one generator to a polynomial");
    c_derive->add_option("gen", generator, "generator index (1-based)")
        ->required();
    spec_arg(c_derive);
    c_derive->add_option("poly", expr_a, "polynomial, e.g. \"z1.z2\"")
        ->required();
    c_derive->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            const PolyRep f = PolyRep::parse(spec.n_generators(), expr_a);
            guard_degree(spec.n_generators(), f.total_degree() + 1, force);
            const PolyRep result = q_derivative(spec, generator, f, scheme());
            out << result.str() << "\n";
            if (const auto at = q_at())
                print_eval_line(out, at, poly_at(result, *at));
            return 0;
        };
    });

    CLI::App* c_wave = app.add_subcommand(
        "wave-check",
        "verify the factorization and symmetries of the q-wave operator");
    spec_arg(c_wave);
    c_wave->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            guard_degree(spec.n_generators(), max_degree + 1, force);
            int checks = 0, failures = 0;
            print_check(out,
                        "wave-operator identities degree<=" +
                            std::to_string(max_degree),
                        wave_operator_check(spec, max_degree), checks,
                        failures);
            return failures == 0 ? 0 : 1;
        };
    });

    CLI::App* c_poisson = app.add_subcommand(
        "poisson", "Poisson bracket induced by the star commutator");
    spec_arg(c_poisson);
    c_poisson->add_option("f", expr_a, "left polynomial")->required();
    c_poisson->add_option("g", expr_b, "right polynomial")->required();
    c_poisson->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            const int N = spec.n_generators();
            const PolyRep f = PolyRep::parse(N, expr_a);
            const PolyRep g = PolyRep::parse(N, expr_b);
            Budget budget;
            budget.force = force;
            QsymEngine engine(spec, budget);
            const PolyRep bracket = poisson_bracket(engine, f, g);
            out << bracket.str() << "\n";
            if (const auto at = q_at())
                print_eval_line(out, at, poly_at(bracket, *at));
            return 0;
        };
    });

    CLI::App* c_path = app.add_subcommand(
        "path-op", "factored form of the q-derivative at a matrix cell");
    c_path->add_option("i", cell_i, "row index (1-based)")->required();
    c_path->add_option("j", cell_j, "column index (1-based)")->required();
    spec_arg(c_path);
    c_path->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            out << path_operator(spec, cell_i, cell_j).str() << "\n";
            return 0;
        };
    });

    CLI::App* c_lift = app.add_subcommand(
        "lift-check",
        "verify a level-truncated lift against the fourth derivative");
    c_lift->add_option("version", lift_name, "AF or BG")
        ->required()
        ->check(CLI::IsMember({"AF", "BG"}, CLI::ignore_case));
    spec_arg(c_lift);
    c_lift->add_option("poly", expr_a, "polynomial to lift")->required();
    c_lift->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            const PolyRep f = PolyRep::parse(spec.n_generators(), expr_a);
            const bool af = lift_name == "AF" || lift_name == "af" ||
                            lift_name == "Af" || lift_name == "aF";
            const LiftVersion version =
                af ? LiftVersion::af : LiftVersion::bg;
            int checks = 0, failures = 0;
            print_check(out, std::string("lift ") + (af ? "AF" : "BG"),
                        covariant_lift_check(spec, version, f), checks,
                        failures);
            return failures == 0 ? 0 : 1;
        };
    });

    CLI::App* c_verify = app.add_subcommand(
        "verify", "run a named verification suite over a degree sweep");
    spec_arg(c_verify);
    c_verify
        ->add_option("--suite", suite,
                     "stars, braid, closed-forms, paths, "
                     "opposite-relations, lifts, or all")
        ->check(CLI::IsMember({"stars", "braid", "closed-forms", "paths",
                               "opposite-relations", "lifts", "all"}))
        ->capture_default_str();
    c_verify->callback([&] {
        action = [&] {
            const AlgebraSpec spec = load_spec(spec_path, in);
            return do_verify(spec, suite, max_degree, force, out);
        };
    });

    CLI::App* c_catalog = app.add_subcommand(
        "catalog", "print a built-in algebra presentation");
    c_catalog
        ->add_option("family", family_name,
                     "aiii, ci, fq, quantum_plane, or symmetric")
        ->required();
    c_catalog->add_option("param", family_param, "family size parameter")
        ->required();
    c_catalog->fallthrough();
    c_catalog->callback([&] {
        action = [&] {
            const std::optional<Family> family =
                family_from_string(family_name);
            if (!family)
                throw WrongAlgebra("unknown family '" + family_name + "'");
            out << make_family({*family, family_param}).to_qalg();
            return 0;
        };
    });

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("qdiff");
    for (const std::string& a : args) argv_store.push_back(a);
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (!action) return 2;
        return action();
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const QdiffError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qdiff

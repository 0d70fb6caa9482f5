#include "qdiff/qcoeff.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "qdiff/text.hpp"

namespace qdiff {
namespace {

void lp_add_term(LaurentPoly& p, long e, const Rational& c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.erase(it);
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b) lp_add_term(r, e, c);
    return r;
}

LaurentPoly lp_neg(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a) r.emplace(e, -c);
    return r;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) lp_add_term(r, ea + eb, ca * cb);
    return r;
}

LaurentPoly lp_shift(const LaurentPoly& a, long k) {
    if (k == 0) return a;
    LaurentPoly r;
    for (const auto& [e, c] : a) r.emplace(e + k, c);
    return r;
}

LaurentPoly lp_scale(const LaurentPoly& a, const Rational& s) {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : a) r.emplace(e, c * s);
    return r;
}

long lp_min_exp(const LaurentPoly& a) { return a.begin()->first; }
long lp_max_exp(const LaurentPoly& a) { return a.rbegin()->first; }

Rational lp_sum_of_coeffs(const LaurentPoly& a) {
    Rational s = 0;
    for (const auto& [e, c] : a) s += c;
    return s;
}

/// Long division of ordinary polynomials (exponents >= 0, b nonzero):
/// returns (quotient, remainder) with a = quotient * b + remainder.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(LaurentPoly a,
                                                const LaurentPoly& b) {
    LaurentPoly quot;
    const long db = lp_max_exp(b);
    const Rational& lb = b.rbegin()->second;
    while (!a.empty() && lp_max_exp(a) >= db) {
        const long sh = lp_max_exp(a) - db;
        const Rational f = a.rbegin()->second / lb;
        quot.emplace(sh, f);
        a = lp_add(a, lp_neg(lp_mul(b, LaurentPoly{{sh, f}})));
    }
    return {std::move(quot), std::move(a)};
}

/// Monic gcd of two ordinary polynomials; gcd(a, 0) = monic(a).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.empty()) {
        auto dm = poly_divmod(std::move(a), b);
        a = std::move(b);
        b = std::move(dm.second);
    }
    if (a.empty()) return a;
    return lp_scale(a, Rational(1) / a.rbegin()->second);
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    const bool neg = e < 0;
    const unsigned long k =
        neg ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), r.get_num().get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), r.get_den().get_mpz_t(), k);
    if (neg) {
        if (pn == 0)
            throw ZeroDenominator("negative power of zero");
        std::swap(pn, pd);
    }
    Rational out(pn, pd);
    out.canonicalize();
    return out;
}

std::string lp_str(const LaurentPoly& p) {
    if (p.empty()) return "0q^0";
    std::string s;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const Rational& c = it->second;
        if (first) {
            s += c.get_str();
            first = false;
        } else if (c < 0) {
            s += '-';
            s += Rational(-c).get_str();
        } else {
            s += '+';
            s += c.get_str();
        }
        s += "q^";
        s += std::to_string(it->first);
    }
    return s;
}

Rational parse_rational(TextCursor& cur) {
    cur.skip_ws();
    std::string digits;
    if (cur.peek() == '-') digits += cur.advance();
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(cur.peek())))
        digits += cur.advance();
    std::string denom;
    if (cur.peek() == '/' && std::isdigit(static_cast<unsigned char>(cur.peek_at(1)))) {
        cur.advance();
        while (std::isdigit(static_cast<unsigned char>(cur.peek())))
            denom += cur.advance();
        if (denom.find_first_not_of('0') == std::string::npos)
            cur.fail("zero denominator in rational");
    }
    Rational r(denom.empty() ? digits : digits + "/" + denom);
    r.canonicalize();
    return r;
}

long parse_int(TextCursor& cur) {
    cur.skip_ws();
    std::string digits;
    if (cur.peek() == '-') digits += cur.advance();
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(cur.peek())))
        digits += cur.advance();
    return std::stol(digits);
}

/// term := rational 'q^' int
std::pair<long, Rational> parse_term(TextCursor& cur) {
    const Rational r = parse_rational(cur);
    cur.skip_ws();
    if (!cur.try_consume('q')) cur.fail("expected 'q^'");
    if (!cur.try_consume('^')) cur.fail("expected '^' after 'q'");
    const long e = parse_int(cur);
    return {e, r};
}

/// sum := term (('+'|'-') term)*, consuming greedily: a sign is taken as a
/// continuation only if a full term follows it.
LaurentPoly parse_sum(TextCursor& cur) {
    LaurentPoly p;
    auto [e0, r0] = parse_term(cur);
    lp_add_term(p, e0, r0);
    for (;;) {
        const size_t save = cur.pos();
        cur.skip_ws();
        const char sign = cur.peek();
        if (sign != '+' && sign != '-') {
            cur.seek(save);
            break;
        }
        cur.advance();
        try {
            auto [e, r] = parse_term(cur);
            lp_add_term(p, e, sign == '-' ? Rational(-r) : r);
        } catch (const ParseError&) {
            cur.seek(save);
            break;
        }
    }
    return p;
}

} // namespace

QCoeff::QCoeff() : num_(), den_{{0, Rational(1)}} {}

QCoeff::QCoeff(long v) : QCoeff() {
    if (v != 0) num_[0] = Rational(v);
}

QCoeff QCoeff::zero() { return QCoeff(); }

QCoeff QCoeff::one() { return from_rational(Rational(1)); }

QCoeff QCoeff::from_rational(const Rational& r) { return monomial(r, 0); }

QCoeff QCoeff::q_power(long e) { return monomial(Rational(1), e); }

QCoeff QCoeff::monomial(const Rational& r, long e) {
    LaurentPoly n;
    if (r != 0) n.emplace(e, r);
    return QCoeff(std::move(n), LaurentPoly{{0, Rational(1)}});
}

QCoeff QCoeff::from_laurent(const LaurentPoly& numerator) {
    return make_canonical(numerator, LaurentPoly{{0, Rational(1)}});
}

QCoeff QCoeff::quotient(const LaurentPoly& numerator,
                        const LaurentPoly& denominator) {
    return make_canonical(numerator, denominator);
}

QCoeff QCoeff::make_canonical(LaurentPoly num, LaurentPoly den) {
    LaurentPoly clean;
    for (const auto& [e, c] : num)
        if (c != 0) lp_add_term(clean, e, c);
    num = std::move(clean);
    clean.clear();
    for (const auto& [e, c] : den)
        if (c != 0) lp_add_term(clean, e, c);
    den = std::move(clean);

    if (den.empty()) throw ZeroDenominator("division by the zero polynomial");
    if (num.empty()) return QCoeff(LaurentPoly{}, LaurentPoly{{0, Rational(1)}});

    const long a = lp_min_exp(num);
    const long b = lp_min_exp(den);
    LaurentPoly n = lp_shift(num, -a);
    LaurentPoly d = lp_shift(den, -b);
    const long net = a - b;

    const LaurentPoly g = poly_gcd(n, d);
    if (!(g.size() == 1 && g.count(0) == 1)) {
        n = poly_divmod(std::move(n), g).first;
        d = poly_divmod(std::move(d), g).first;
    }
    const Rational lc = d.rbegin()->second;
    if (lc != 1) {
        const Rational inv = Rational(1) / lc;
        n = lp_scale(n, inv);
        d = lp_scale(d, inv);
    }
    return QCoeff(lp_shift(n, net), std::move(d));
}

bool QCoeff::is_one() const {
    return num_.size() == 1 && num_.count(0) == 1 && num_.at(0) == 1 &&
           den_.size() == 1 && den_.count(0) == 1 && den_.at(0) == 1;
}

std::optional<Rational> QCoeff::as_rational() const {
    if (!(den_.size() == 1 && den_.count(0) == 1 && den_.at(0) == 1))
        return std::nullopt;
    if (num_.empty()) return Rational(0);
    if (num_.size() == 1 && num_.count(0) == 1) return num_.at(0);
    return std::nullopt;
}

std::optional<long> QCoeff::as_q_power() const {
    auto m = as_monomial();
    if (m && m->first == 1) return m->second;
    return std::nullopt;
}

std::optional<std::pair<Rational, long>> QCoeff::as_monomial() const {
    if (!(den_.size() == 1 && den_.count(0) == 1 && den_.at(0) == 1))
        return std::nullopt;
    if (num_.size() != 1) return std::nullopt;
    return std::make_pair(num_.begin()->second, num_.begin()->first);
}

QCoeff QCoeff::operator+(const QCoeff& o) const {
    return make_canonical(lp_add(lp_mul(num_, o.den_), lp_mul(o.num_, den_)),
                          lp_mul(den_, o.den_));
}

QCoeff QCoeff::operator-(const QCoeff& o) const { return *this + (-o); }

QCoeff QCoeff::operator*(const QCoeff& o) const {
    return make_canonical(lp_mul(num_, o.num_), lp_mul(den_, o.den_));
}

QCoeff QCoeff::operator/(const QCoeff& o) const { return *this * o.inverse(); }

QCoeff QCoeff::operator-() const { return QCoeff(lp_neg(num_), den_); }

QCoeff& QCoeff::operator+=(const QCoeff& o) { return *this = *this + o; }
QCoeff& QCoeff::operator-=(const QCoeff& o) { return *this = *this - o; }
QCoeff& QCoeff::operator*=(const QCoeff& o) { return *this = *this * o; }

QCoeff QCoeff::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    return make_canonical(den_, num_);
}

bool QCoeff::operator<(const QCoeff& o) const {
    if (num_ < o.num_) return true;
    if (o.num_ < num_) return false;
    return den_ < o.den_;
}

Rational QCoeff::eval_at_one() const {
    const Rational d1 = lp_sum_of_coeffs(den_);
    if (d1 == 0)
        throw PoleAtOne("denominator of " + str() + " vanishes at q = 1");
    return lp_sum_of_coeffs(num_) / d1;
}

Rational QCoeff::eval_at(const Rational& r) const {
    Rational dv = 0;
    for (const auto& [e, c] : den_) dv += c * rational_pow(r, e);
    if (dv == 0)
        throw ZeroDenominator("denominator of " + str() + " vanishes at q = " +
                              r.get_str());
    Rational nv = 0;
    for (const auto& [e, c] : num_) {
        if (e < 0 && r == 0)
            throw ZeroDenominator("negative power of q evaluated at q = 0");
        nv += c * rational_pow(r, e);
    }
    return nv / dv;
}

QCoeff QCoeff::poisson_scale() const {
    Rational v;
    try {
        v = eval_at_one();
    } catch (const PoleAtOne&) {
        throw NotVanishingAtOne("value " + str() + " has a pole at q = 1");
    }
    if (v != 0)
        throw NotVanishingAtOne("value " + str() + " equals " + v.get_str() +
                                " at q = 1, not 0");
    if (num_.empty()) return *this;
    const long k = lp_min_exp(num_);
    const LaurentPoly n = lp_shift(num_, -k);
    const LaurentPoly q_minus_1{{1, Rational(1)}, {0, Rational(-1)}};
    auto dm = poly_divmod(n, q_minus_1);
    return make_canonical(lp_shift(dm.first, k), den_);
}

std::string QCoeff::str() const {
    const bool den_is_one =
        den_.size() == 1 && den_.count(0) == 1 && den_.at(0) == 1;
    if (den_is_one) return lp_str(num_);
    return "(" + lp_str(num_) + ")/(" + lp_str(den_) + ")";
}

QCoeff QCoeff::parse_prefix(TextCursor& cur) {
    cur.skip_ws();
    if (cur.peek() == '(') {
        cur.advance();
        const LaurentPoly num = parse_sum(cur);
        cur.skip_ws();
        cur.expect(')', "')' closing the numerator");
        cur.skip_ws();
        cur.expect('/', "'/' between numerator and denominator");
        cur.skip_ws();
        cur.expect('(', "'(' opening the denominator");
        const LaurentPoly den = parse_sum(cur);
        cur.skip_ws();
        cur.expect(')', "')' closing the denominator");
        return quotient(num, den);
    }
    return from_laurent(parse_sum(cur));
}

QCoeff QCoeff::parse(const std::string& text) {
    TextCursor cur(text);
    const QCoeff c = parse_prefix(cur);
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return c;
}

QCoeff q_lambda() {
    return QCoeff::from_laurent(LaurentPoly{{1, Rational(1)}, {-1, Rational(-1)}});
}

} // namespace qdiff

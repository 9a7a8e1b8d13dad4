#include "ks/scalar.hpp"

#include <cctype>
#include <cmath>

namespace ks {

Rational rat(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer isqrt_floor(const Rational& q) {
    if (sgn(q) < 0) throw std::domain_error("isqrt_floor of negative");
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Integer r;
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    return r;
}

Rational rat_sqrt(const Rational& q) {
    if (sgn(q) < 0) throw NotASquare("negative rational");
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        throw NotASquare(to_string(q) + " is not a rational square");
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// ---- QuadExt ----

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    a += o.a;
    b += o.b;
    return *this;
}
QuadExt& QuadExt::operator-=(const QuadExt& o) {
    a -= o.a;
    b -= o.b;
    return *this;
}
QuadExt& QuadExt::operator*=(const QuadExt& o) {
    Rational na = a * o.a + 2 * b * o.b;
    Rational nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}
QuadExt QuadExt::inv() const {
    Rational n = norm();
    if (sgn(n) == 0) throw DivisionByZero("inverse of zero in Q(sqrt2)");
    return {a / n, -b / n};
}
QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inv(); }

int qe_sign(const QuadExt& x) {
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 2b^2
    int c = cmp(x.a * x.a, 2 * x.b * x.b);
    return c > 0 ? sa : sb;
}

QuadExt qe_abs(const QuadExt& x) { return qe_sign(x) < 0 ? -x : x; }

QuadExt qe_sqrt(const QuadExt& x) {
    int s = qe_sign(x);
    if (s < 0) throw NotASquare("negative element has no real square root");
    if (s == 0) return {};
    // (c + d sqrt2)^2 = c^2 + 2d^2 + 2cd sqrt2
    auto accept = [&](const QuadExt& y) { return y * y == x; };
    if (sgn(x.b) == 0) {
        try {
            QuadExt y(rat_sqrt(x.a));
            if (accept(y)) return y;
        } catch (const NotASquare&) {
        }
        try {
            QuadExt y(0, rat_sqrt(x.a / 2));
            if (accept(y)) return y;
        } catch (const NotASquare&) {
        }
        throw NotASquare(to_string(x) + " is not a square in Q(sqrt2)");
    }
    Rational n;
    try {
        n = rat_sqrt(x.norm());
    } catch (const NotASquare&) {
        throw NotASquare(to_string(x) + " is not a square in Q(sqrt2)");
    }
    for (int sign : {1, -1}) {
        Rational c2 = (x.a + sign * n) / 2;
        if (sgn(c2) <= 0) continue;
        Rational c;
        try {
            c = rat_sqrt(c2);
        } catch (const NotASquare&) {
            continue;
        }
        QuadExt y(c, x.b / (2 * c));
        if (qe_sign(y) < 0) y = -y;
        if (accept(y)) return y;
    }
    throw NotASquare(to_string(x) + " is not a square in Q(sqrt2)");
}

static std::string rat_factor(const Rational& q) {
    std::string s = to_string(q);
    return q.get_den() == 1 ? s : "(" + s + ")";
}

std::string to_string(const QuadExt& x) {
    if (sgn(x.b) == 0) return to_string(x.a);
    Rational ab = abs(x.b);
    std::string root = (ab == 1 ? std::string("sqrt2") : rat_factor(ab) + "*sqrt2");
    if (sgn(x.a) == 0) return (sgn(x.b) < 0 ? "-" : "") + root;
    return to_string(x.a) + (sgn(x.b) < 0 ? " - " : " + ") + root;
}

double to_double(const QuadExt& x) { return x.a.get_d() + x.b.get_d() * std::sqrt(2.0); }

// ---- GaussQuad ----

GaussQuad& GaussQuad::operator+=(const GaussQuad& o) {
    re += o.re;
    im += o.im;
    return *this;
}
GaussQuad& GaussQuad::operator-=(const GaussQuad& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}
GaussQuad& GaussQuad::operator*=(const GaussQuad& o) {
    QuadExt nr = re * o.re - im * o.im;
    QuadExt ni = re * o.im + im * o.re;
    re = std::move(nr);
    im = std::move(ni);
    return *this;
}
GaussQuad gq_inv(const GaussQuad& x) {
    QuadExt n = x.abs2();
    if (is_zero(n)) throw DivisionByZero("inverse of zero in Q(sqrt2,i)");
    QuadExt ni = n.inv();
    return {x.re * ni, -(x.im * ni)};
}
GaussQuad& GaussQuad::operator/=(const GaussQuad& o) { return *this *= gq_inv(o); }

std::string to_string(const GaussQuad& x) {
    if (is_zero(x.im)) return to_string(x.re);
    std::string im;
    if (x.im == QuadExt(1))
        im = "I";
    else if (x.im == QuadExt(-1))
        im = "-I";
    else if (x.im.is_rational())
        im = rat_factor(x.im.a) + "*I";
    else
        im = "(" + to_string(x.im) + ")*I";
    if (is_zero(x.re)) return im;
    std::string re = x.re.is_rational() ? to_string(x.re.a) : "(" + to_string(x.re) + ")";
    if (im[0] == '-') return re + " - " + im.substr(1);
    return re + " + " + im;
}

// ---- parsing ----

namespace {

struct Parser {
    const std::string& s;
    size_t p = 0;

    void ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(char c) {
        ws();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("cannot parse '" + s + "' at offset " + std::to_string(p) + ": " + why);
    }

    GaussQuad expr() {
        GaussQuad v;
        bool neg = false;
        ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        v = term();
        if (neg) v = -v;
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    GaussQuad term() {
        GaussQuad v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                return v;
        }
    }
    GaussQuad factor() {
        ws();
        if (eat('(')) {
            GaussQuad v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) return -factor();
        if (s.compare(p, 5, "sqrt2") == 0) {
            p += 5;
            return GaussQuad(QuadExt::sqrt2());
        }
        if (p < s.size() && (s[p] == 'I' || s[p] == 'i')) {
            ++p;
            return GaussQuad::I();
        }
        size_t q = p;
        while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
        if (q == p) fail("expected number");
        Integer n(s.substr(p, q - p));
        p = q;
        return GaussQuad(Rational(n));
    }
};

}  // namespace

GaussQuad parse_gauss(const std::string& s) {
    Parser ps{s};
    GaussQuad v = ps.expr();
    ps.ws();
    if (ps.p != s.size()) ps.fail("trailing input");
    return v;
}

QuadExt parse_quad(const std::string& s) {
    GaussQuad g = parse_gauss(s);
    if (!g.is_real()) throw ParseError("'" + s + "' is not real");
    return g.re;
}

Rational parse_rational(const std::string& s) {
    QuadExt q = parse_quad(s);
    if (!q.is_rational()) throw ParseError("'" + s + "' is not rational");
    return q.a;
}

}  // namespace ks

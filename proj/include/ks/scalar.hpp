// Exact scalars: Q, Q(sqrt2), Q(sqrt2, i).
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ks {

using Integer = mpz_class;
using Rational = mpq_class;

struct NotASquare : std::domain_error {
    using std::domain_error::domain_error;
};
struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational rat(long num, long den = 1);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
// Floor of sqrt(q) for q >= 0.
Integer isqrt_floor(const Rational& q);
// Exact rational square root, or throws NotASquare.
Rational rat_sqrt(const Rational& q);
bool is_integral(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

// a + b*sqrt2
struct QuadExt {
    Rational a, b;

    QuadExt() = default;
    QuadExt(long v) : a(v) {}
    QuadExt(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}

    static QuadExt sqrt2() { return {0, 1}; }

    QuadExt operator-() const { return {-a, -b}; }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);
    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // a - b*sqrt2
    QuadExt galois() const { return {a, -b}; }
    Rational norm() const { return a * a - 2 * b * b; }
    QuadExt inv() const;
    bool is_rational() const { return sgn(b) == 0; }
};

int qe_sign(const QuadExt& x);
QuadExt qe_sqrt(const QuadExt& x);
QuadExt qe_abs(const QuadExt& x);
inline bool is_zero(const QuadExt& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }
// Total order induced by sqrt2 > 0.
inline bool operator<(const QuadExt& x, const QuadExt& y) { return qe_sign(x - y) < 0; }
std::string to_string(const QuadExt& x);
double to_double(const QuadExt& x);

// re + im*I
struct GaussQuad {
    QuadExt re, im;

    GaussQuad() = default;
    GaussQuad(long v) : re(v) {}
    GaussQuad(Rational r) : re(std::move(r)) {}
    GaussQuad(QuadExt r, QuadExt i = {}) : re(std::move(r)), im(std::move(i)) {}

    static GaussQuad I() { return {QuadExt{}, QuadExt{1}}; }

    GaussQuad operator-() const { return {-re, -im}; }
    GaussQuad& operator+=(const GaussQuad& o);
    GaussQuad& operator-=(const GaussQuad& o);
    GaussQuad& operator*=(const GaussQuad& o);
    GaussQuad& operator/=(const GaussQuad& o);
    friend GaussQuad operator+(GaussQuad x, const GaussQuad& y) { return x += y; }
    friend GaussQuad operator-(GaussQuad x, const GaussQuad& y) { return x -= y; }
    friend GaussQuad operator*(GaussQuad x, const GaussQuad& y) { return x *= y; }
    friend GaussQuad operator/(GaussQuad x, const GaussQuad& y) { return x /= y; }
    friend bool operator==(const GaussQuad& x, const GaussQuad& y) { return x.re == y.re && x.im == y.im; }
    friend bool operator!=(const GaussQuad& x, const GaussQuad& y) { return !(x == y); }

    GaussQuad conj() const { return {re, -im}; }
    QuadExt abs2() const { return re * re + im * im; }
    bool is_real() const { return is_zero(im); }
};

GaussQuad gq_inv(const GaussQuad& x);
inline bool is_zero(const GaussQuad& x) { return is_zero(x.re) && is_zero(x.im); }

inline int abs_cmp(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

namespace detail {
// Unqualified call so that overloads found by argument-dependent lookup are used.
template <class T>
bool zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail
std::string to_string(const GaussQuad& x);

// Recursive-descent parser for expressions over numbers, sqrt2, I, + - * / and parentheses.
GaussQuad parse_gauss(const std::string& s);
QuadExt parse_quad(const std::string& s);
Rational parse_rational(const std::string& s);

// Complex conjugation on every scalar type; identity on real fields.
inline const Rational& conj(const Rational& x) { return x; }
inline const QuadExt& conj(const QuadExt& x) { return x; }
inline GaussQuad conj(const GaussQuad& x) { return x.conj(); }

}  // namespace ks

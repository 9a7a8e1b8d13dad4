// Quaternions over an exact scalar ring, the Hurwitz order, and chi: H -> M2(C).
#pragma once

#include <array>
#include <string>
#include <vector>

#include "ks/matrix.hpp"
#include "ks/scalar.hpp"

namespace ks {

template <class S>
struct Quat {
    S w{0}, x{0}, y{0}, z{0};

    Quat() = default;
    Quat(long v) : w(v) {}
    Quat(S w_) : w(std::move(w_)) {}
    Quat(S w_, S x_, S y_, S z_) : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static Quat i() { return {S(0), S(1), S(0), S(0)}; }
    static Quat j() { return {S(0), S(0), S(1), S(0)}; }
    static Quat k() { return {S(0), S(0), S(0), S(1)}; }

    std::array<S, 4> coeffs() const { return {w, x, y, z}; }

    Quat operator-() const { return {-w, -x, -y, -z}; }
    Quat& operator+=(const Quat& o) {
        w += o.w, x += o.x, y += o.y, z += o.z;
        return *this;
    }
    Quat& operator-=(const Quat& o) {
        w -= o.w, x -= o.x, y -= o.y, z -= o.z;
        return *this;
    }
    Quat& operator*=(const Quat& o) { return *this = *this * o; }
    friend Quat operator+(Quat a, const Quat& b) { return a += b; }
    friend Quat operator-(Quat a, const Quat& b) { return a -= b; }
    friend Quat operator*(const Quat& a, const Quat& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend Quat operator*(const S& s, const Quat& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
    friend Quat operator/(const Quat& a, const Quat& b) { return a * b.inv(); }
    friend bool operator==(const Quat& a, const Quat& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }

    Quat conj() const { return {w, -x, -y, -z}; }
    S norm() const { return w * w + x * x + y * y + z * z; }
    // reduced trace q + conj(q)
    S trace() const { return S(2) * w; }
    Quat inv() const {
        S n = norm();
        if (ks::is_zero(n)) throw DivisionByZero("inverse of zero quaternion");
        S ni = S(1) / n;
        return {w * ni, -x * ni, -y * ni, -z * ni};
    }
};

template <class S>
bool is_zero(const Quat<S>& q) {
    return is_zero(q.w) && is_zero(q.x) && is_zero(q.y) && is_zero(q.z);
}
template <class S>
Quat<S> conj(const Quat<S>& q) {
    return q.conj();
}

using QuatQ = Quat<Rational>;
using QuatR = Quat<QuadExt>;

QuatR lift(const QuatQ& q);

template <class S>
std::string to_string(const Quat<S>& q) {
    static const char* units[] = {"", "*i", "*j", "*k"};
    auto c = q.coeffs();
    std::string s;
    for (int t = 0; t < 4; ++t) {
        if (is_zero(c[t])) continue;
        std::string v = to_string(c[t]);
        bool compound = v.find_first_of("+ ") != std::string::npos || v.find(" - ") != std::string::npos;
        if (compound) v = "(" + v + ")";
        if (s.empty())
            s = v + units[t];
        else if (v[0] == '-')
            s += " - " + v.substr(1) + units[t];
        else
            s += " + " + v + units[t];
    }
    return s.empty() ? "0" : s;
}

// ---- Hurwitz order ----

// h = (1+i+j+k)/2
QuatQ hurwitz_h();
// {h, i, j, k}
std::array<QuatQ, 4> hurwitz_basis();
// Gram of b(p,q) = Re(p conj q) on {h,i,j,k}; equals M_o.
Mat<Rational> hurwitz_gram();

struct HurwitzElem {
    std::array<Integer, 4> c;  // coordinates on {h, i, j, k}

    QuatQ value() const;
    static HurwitzElem from_quat(const QuatQ& q);  // throws if q is not in the order
    friend HurwitzElem operator*(const HurwitzElem& a, const HurwitzElem& b) {
        return from_quat(a.value() * b.value());
    }
    friend bool operator==(const HurwitzElem& a, const HurwitzElem& b) { return a.c == b.c; }
    std::string to_string() const;
};

bool in_hurwitz(const QuatQ& q);

// ---- chi ----

Mat<GaussQuad> chi(const QuatQ& q);
Mat<GaussQuad> chi(const QuatR& q);
// Block form chi(M) = [[A, B], [-conj B, conj A]] for M = A + B j, n x n -> 2n x 2n.
Mat<GaussQuad> chi_matrix(const Mat<QuatR>& m);
// chi(q) (x) 1_n
Mat<GaussQuad> chi_kron(const QuatQ& q, size_t n);
Mat<GaussQuad> chi_kron(const QuatR& q, size_t n);

}  // namespace ks

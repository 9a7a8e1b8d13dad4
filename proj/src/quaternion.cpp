#include "ks/quaternion.hpp"

namespace ks {

QuatR lift(const QuatQ& q) { return {QuadExt(q.w), QuadExt(q.x), QuadExt(q.y), QuadExt(q.z)}; }

QuatQ hurwitz_h() { return {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)}; }

std::array<QuatQ, 4> hurwitz_basis() { return {hurwitz_h(), QuatQ::i(), QuatQ::j(), QuatQ::k()}; }

Mat<Rational> hurwitz_gram() {
    auto b = hurwitz_basis();
    Mat<Rational> g(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) g(r, c) = (b[r] * b[c].conj()).w;
    return g;
}

// q = c0 h + c1 i + c2 j + c3 k  =>  w = c0/2, x = c0/2 + c1, ...
HurwitzElem HurwitzElem::from_quat(const QuatQ& q) {
    Rational c0 = 2 * q.w;
    Rational c1 = q.x - q.w, c2 = q.y - q.w, c3 = q.z - q.w;
    for (const Rational* v : {&c0, &c1, &c2, &c3})
        if (!is_integral(*v)) throw std::domain_error(ks::to_string(q) + " is not a Hurwitz integer");
    return {{c0.get_num(), c1.get_num(), c2.get_num(), c3.get_num()}};
}

QuatQ HurwitzElem::value() const {
    auto b = hurwitz_basis();
    QuatQ q;
    for (int t = 0; t < 4; ++t) q += Rational(c[t]) * b[t];
    return q;
}

std::string HurwitzElem::to_string() const {
    return "[" + c[0].get_str() + "," + c[1].get_str() + "," + c[2].get_str() + "," + c[3].get_str() + "]";
}

bool in_hurwitz(const QuatQ& q) {
    try {
        HurwitzElem::from_quat(q);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

Mat<GaussQuad> chi(const QuatR& q) {
    Mat<GaussQuad> m(2, 2);
    m(0, 0) = GaussQuad(q.w, q.x);
    m(0, 1) = GaussQuad(q.y, q.z);
    m(1, 0) = GaussQuad(-q.y, q.z);
    m(1, 1) = GaussQuad(q.w, -q.x);
    return m;
}

Mat<GaussQuad> chi(const QuatQ& q) { return chi(lift(q)); }

Mat<GaussQuad> chi_matrix(const Mat<QuatR>& m) {
    size_t r = m.rows, c = m.cols;
    Mat<GaussQuad> out(2 * r, 2 * c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            auto x = chi(m(i, j));
            out(i, j) = x(0, 0);
            out(i, c + j) = x(0, 1);
            out(r + i, j) = x(1, 0);
            out(r + i, c + j) = x(1, 1);
        }
    return out;
}

Mat<GaussQuad> chi_kron(const QuatR& q, size_t n) { return kron(chi(q), Mat<GaussQuad>::identity(n)); }
Mat<GaussQuad> chi_kron(const QuatQ& q, size_t n) { return chi_kron(lift(q), n); }

}  // namespace ks

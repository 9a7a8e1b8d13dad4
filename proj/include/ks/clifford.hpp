// Clifford algebra of a lattice with arbitrary Gram matrix, on the subset basis e_S.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ks/lattice.hpp"
#include "ks/quaternion.hpp"

namespace ks {

struct AlgebraMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RelationViolation : std::domain_error {
    size_t i, j;
    RelationViolation(size_t i_, size_t j_)
        : std::domain_error("Clifford relation fails for generators " + std::to_string(i_ + 1) + ", " +
                            std::to_string(j_ + 1)),
          i(i_),
          j(j_) {}
};

using Mask = uint32_t;
using SparseRow = std::vector<std::pair<Mask, Rational>>;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline int parity(Mask m) { return popcount(m) & 1; }

class CliffordAlg {
  public:
    // b is the polar form: e_i e_j + e_j e_i = 2 b_ij, e_i^2 = b_ii.
    explicit CliffordAlg(QMat bilinear, std::vector<std::string> names = {});

    size_t n() const { return n_; }
    Mask dim() const { return Mask(1) << n_; }
    Mask even_dim() const { return n_ == 0 ? 1 : dim() / 2; }
    const QMat& bilinear() const { return b_; }
    const std::vector<std::string>& names() const { return names_; }
    std::vector<Mask> even_monomials() const;
    std::vector<Mask> odd_monomials() const;

    // e_S * e_R
    const SparseRow& mono(Mask s, Mask r) const { return table_[(size_t(s) << n_) | r]; }
    // e_S * e_i
    const SparseRow& mono_gen(Mask s, size_t i) const { return gen_[s * n_ + i]; }

    std::string mask_name(Mask s) const;

  private:
    size_t n_;
    QMat b_;
    std::vector<std::string> names_;
    std::vector<SparseRow> gen_;    // [s * n + i]
    std::vector<SparseRow> table_;  // [s << n | r]
};

using AlgPtr = std::shared_ptr<const CliffordAlg>;

AlgPtr make_algebra(const IntLattice& l, std::vector<std::string> names = {});

template <class S>
S from_rational(const Rational& q) {
    return S(q);
}

template <class S>
struct CElem {
    AlgPtr alg;
    std::map<Mask, S> c;

    CElem() = default;
    explicit CElem(AlgPtr a) : alg(std::move(a)) {}

    static CElem one(AlgPtr a) { return scalar(std::move(a), S(1)); }
    static CElem scalar(AlgPtr a, const S& s) {
        CElem e(std::move(a));
        if (!ks::detail::zero(s)) e.c[0] = s;
        return e;
    }
    static CElem gen(AlgPtr a, size_t i) { return mono(std::move(a), Mask(1) << i); }
    static CElem mono(AlgPtr a, Mask m, const S& s = S(1)) {
        CElem e(std::move(a));
        if (!ks::detail::zero(s)) e.c[m] = s;
        return e;
    }
    // v = sum v_i e_i
    static CElem vec(AlgPtr a, const std::vector<S>& v) {
        CElem e(std::move(a));
        for (size_t i = 0; i < v.size(); ++i)
            if (!ks::detail::zero(v[i])) e.c[Mask(1) << i] = v[i];
        return e;
    }

    bool is_zero() const { return c.empty(); }
    void prune() {
        for (auto it = c.begin(); it != c.end();) it = ks::detail::zero(it->second) ? c.erase(it) : std::next(it);
    }
    // -1 mixed, 0 even, 1 odd; zero counts as even
    int parity_type() const {
        int p = -2;
        for (const auto& [m, x] : c) {
            int q = parity(m);
            if (p == -2)
                p = q;
            else if (p != q)
                return -1;
        }
        return p == -2 ? 0 : p;
    }
    bool is_even() const { return parity_type() == 0; }
    const S coeff(Mask m) const {
        auto it = c.find(m);
        return it == c.end() ? S(0) : it->second;
    }
    std::vector<S> coords() const {
        std::vector<S> v(alg->dim(), S(0));
        for (const auto& [m, x] : c) v[m] = x;
        return v;
    }
    static CElem from_coords(AlgPtr a, const std::vector<S>& v) {
        CElem e(a);
        for (Mask m = 0; m < v.size(); ++m)
            if (!ks::detail::zero(v[m])) e.c[m] = v[m];
        return e;
    }

    CElem operator-() const {
        CElem e(alg);
        for (const auto& [m, x] : c) e.c[m] = -x;
        return e;
    }
    CElem& operator+=(const CElem& o) {
        check(o);
        for (const auto& [m, x] : o.c) c[m] += x;
        prune();
        return *this;
    }
    CElem& operator-=(const CElem& o) {
        check(o);
        for (const auto& [m, x] : o.c) c[m] -= x;
        prune();
        return *this;
    }
    friend CElem operator+(CElem a, const CElem& b) { return a += b; }
    friend CElem operator-(CElem a, const CElem& b) { return a -= b; }
    friend CElem operator*(const S& s, const CElem& a) {
        CElem e(a.alg);
        if (ks::detail::zero(s)) return e;
        for (const auto& [m, x] : a.c) e.c[m] = s * x;
        return e;
    }
    friend CElem operator*(const CElem& a, const CElem& b) {
        a.check(b);
        CElem e(a.alg);
        for (const auto& [s, x] : a.c)
            for (const auto& [r, y] : b.c) {
                S xy = x * y;
                for (const auto& [u, w] : a.alg->mono(s, r)) e.c[u] += xy * from_rational<S>(w);
            }
        e.prune();
        return e;
    }
    friend bool operator==(const CElem& a, const CElem& b) { return a.c == b.c; }
    friend bool operator!=(const CElem& a, const CElem& b) { return !(a == b); }

    void check(const CElem& o) const {
        if (alg.get() != o.alg.get()) throw AlgebraMismatch("elements of different Clifford algebras");
    }
};

using CElemQ = CElem<Rational>;
using CElemR = CElem<QuadExt>;

// e_S -> (-1)^|S| e_S
template <class S>
CElem<S> canonical_automorphism(const CElem<S>& x) {
    CElem<S> e(x.alg);
    for (const auto& [m, v] : x.c) e.c[m] = parity(m) ? S(-v) : v;
    return e;
}

// Reversed generator word of e_S, re-normalized.
SparseRow reverse_monomial(const CliffordAlg& a, Mask s);

template <class S>
CElem<S> transpose(const CElem<S>& x) {
    CElem<S> e(x.alg);
    for (const auto& [m, v] : x.c)
        for (const auto& [u, w] : reverse_monomial(*x.alg, m)) e.c[u] += v * from_rational<S>(w);
    e.prune();
    return e;
}

template <class S>
std::string to_string(const CElem<S>& x) {
    if (x.c.empty()) return "0";
    std::string s;
    for (const auto& [m, v] : x.c) {
        std::string cs = to_string(v);
        bool compound = cs.find(' ') != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        std::string term = cs + " * e{";
        bool first = true;
        for (size_t i = 0; i < x.alg->n(); ++i)
            if (m >> i & 1) term += (first ? "" : ",") + std::to_string(i + 1), first = false;
        term += "}";
        if (s.empty())
            s = term;
        else if (term[0] == '-')
            s += " - " + term.substr(1);
        else
            s += " + " + term;
    }
    return s;
}

// Parses sums/products of numbers, sqrt2, generator names (as given to the algebra, or e1..en),
// and basis monomials e{i,j,...} (1-based).
CElemR parse_element(const AlgPtr& a, const std::string& text);
CElemQ to_rational_elem(const CElemR& x);
CElemR to_quad_elem(const CElemQ& x);

// Cl(V + V'): block-diagonal form; A-generators first.
struct Glued {
    AlgPtr alg;
    size_t shift;  // B-generator offset
    Mask left(Mask s) const { return s; }
    Mask right(Mask s) const { return s << shift; }
};
Glued glue(const CliffordAlg& a, const CliffordAlg& b);

template <class S>
CElem<S> embed(const CElem<S>& x, const AlgPtr& target, size_t shift) {
    CElem<S> e(target);
    for (const auto& [m, v] : x.c) e.c[m << shift] = v;
    return e;
}

// ---- representations ----

using QuatMat = Mat<QuatQ>;

// An algebra homomorphism Cl(V) -> M_dim(H_Q) fixed by generator images, with a +-1 grading on rows.
struct GradedRep {
    AlgPtr source;
    size_t dim = 0;
    std::vector<QuatMat> gens;
    std::vector<int> grading;        // row signs; odd images map + rows to - rows
    std::vector<QuatMat> monomials;  // images of e_S

    bool rational() const;  // all entries real
    QuatMat eval(const CElemQ& x) const;
    QuatMat grading_matrix() const;
};

// Checks phi(e_i)phi(e_j) + phi(e_j)phi(e_i) = 2 b_ij and extends by word products.
GradedRep extend_by_flca(AlgPtr source, std::vector<QuatMat> gens, std::vector<int> grading);

QuatMat quat_identity(size_t n);
QuatMat to_quat(const QMat& m);

}  // namespace ks

#include "ks/lattice.hpp"

#include <algorithm>
#include <functional>
#include <regex>

#include "ks/quaternion.hpp"

namespace ks {

namespace {

Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void row_axpy(IMat& m, size_t dst, size_t src, const Integer& q) {
    for (size_t j = 0; j < m.cols; ++j)
        if (sgn(m(src, j)) != 0) m(dst, j) -= q * m(src, j);
}
void col_axpy(IMat& m, size_t dst, size_t src, const Integer& q) {
    for (size_t i = 0; i < m.rows; ++i)
        if (sgn(m(i, src)) != 0) m(i, dst) -= q * m(i, src);
}
void swap_rows(IMat& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IMat& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

// Integer row reduction on the first `ncols` columns; returns the number of pivot rows.
// Rows are kept in echelon shape with positive pivots and reduced entries above them.
size_t echelon(IMat& m, size_t ncols) {
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < m.rows; ++c) {
        for (;;) {
            size_t best = m.rows;
            for (size_t i = r; i < m.rows; ++i)
                if (sgn(m(i, c)) != 0 && (best == m.rows || abs_cmp(m(i, c), m(best, c)) < 0)) best = i;
            if (best == m.rows) break;
            swap_rows(m, r, best);
            bool clean = true;
            for (size_t i = r + 1; i < m.rows; ++i) {
                if (sgn(m(i, c)) == 0) continue;
                row_axpy(m, i, r, fdiv(m(i, c), m(r, c)));
                if (sgn(m(i, c)) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r == m.rows || sgn(m(r, c)) == 0) continue;
        if (sgn(m(r, c)) < 0)
            for (size_t j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
        for (size_t i = 0; i < r; ++i)
            if (sgn(m(i, c)) != 0) row_axpy(m, i, r, fdiv(m(i, c), m(r, c)));
        ++r;
    }
    return r;
}

}  // namespace

SmithForm smith_normal_form(const IMat& a) {
    SmithForm s;
    s.D = a;
    s.U = IMat::identity(a.rows);
    s.V = IMat::identity(a.cols);
    IMat& d = s.D;
    size_t lim = std::min(a.rows, a.cols);
    for (size_t t = 0; t < lim; ++t) {
        auto min_entry = [&](size_t& bi, size_t& bj) {
            bool found = false;
            for (size_t i = t; i < d.rows; ++i)
                for (size_t j = t; j < d.cols; ++j)
                    if (sgn(d(i, j)) != 0 && (!found || abs_cmp(d(i, j), d(bi, bj)) < 0)) {
                        bi = i, bj = j, found = true;
                    }
            return found;
        };
        size_t bi = 0, bj = 0;
        if (!min_entry(bi, bj)) break;
        for (;;) {
            swap_rows(d, t, bi), swap_rows(s.U, t, bi);
            swap_cols(d, t, bj), swap_cols(s.V, t, bj);
            bool clean = true;
            for (size_t i = t + 1; i < d.rows; ++i) {
                if (sgn(d(i, t)) == 0) continue;
                Integer q = fdiv(d(i, t), d(t, t));
                row_axpy(d, i, t, q), row_axpy(s.U, i, t, q);
                if (sgn(d(i, t)) != 0) clean = false;
            }
            for (size_t j = t + 1; j < d.cols; ++j) {
                if (sgn(d(t, j)) == 0) continue;
                Integer q = fdiv(d(t, j), d(t, t));
                col_axpy(d, j, t, q), col_axpy(s.V, j, t, q);
                if (sgn(d(t, j)) != 0) clean = false;
            }
            if (!clean) {
                // next pivot: smallest entry left in row t / column t
                bi = t, bj = t;
                for (size_t i = t + 1; i < d.rows; ++i)
                    if (sgn(d(i, t)) != 0 && abs_cmp(d(i, t), d(bi, bj)) < 0) bi = i, bj = t;
                for (size_t j = t + 1; j < d.cols; ++j)
                    if (sgn(d(t, j)) != 0 && abs_cmp(d(t, j), d(bi, bj)) < 0) bi = t, bj = j;
                continue;
            }
            // divisibility: fold an offending row into row t
            bool folded = false;
            for (size_t i = t + 1; i < d.rows && !folded; ++i)
                for (size_t j = t + 1; j < d.cols; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        row_axpy(d, t, i, Integer(-1)), row_axpy(s.U, t, i, Integer(-1));
                        folded = true;
                        break;
                    }
            if (!folded) break;
            bi = t, bj = t;
        }
        if (sgn(d(t, t)) < 0) {
            for (size_t j = 0; j < d.cols; ++j) d(t, j) = -d(t, j);
            for (size_t j = 0; j < s.U.cols; ++j) s.U(t, j) = -s.U(t, j);
        }
        s.divisors.push_back(d(t, t));
    }
    return s;
}

std::vector<Integer> elementary_divisors(const IMat& a) { return smith_normal_form(a).divisors; }

IMat hermite_rows(IMat a) {
    size_t r = echelon(a, a.cols);
    return a.block(0, 0, r, a.cols);
}

SubLattice integer_kernel(const IMat& a) {
    size_t m = a.rows, n = a.cols;
    IMat w(m, n + m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
        w(i, n + i) = 1;
    }
    size_t r = echelon(w, n);
    IMat k = w.block(r, n, m - r, m);
    return {m, hermite_rows(k)};
}

IMat clear_denominators_rows(const QMat& m) {
    IMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i) {
        Integer l = 1;
        for (size_t j = 0; j < m.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (size_t j = 0; j < m.cols; ++j) {
            Rational v = m(i, j) * l;
            out(i, j) = v.get_num();
        }
    }
    return out;
}

SubLattice integer_kernel(const QMat& a) {
    // scaling a column does not change the left kernel
    return integer_kernel(clear_denominators_rows(a.transpose()).transpose());
}

IMat to_integer(const QMat& m) {
    IMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.d.size(); ++i) {
        if (!is_integral(m.d[i])) throw std::domain_error("non-integral entry " + to_string(m.d[i]));
        out.d[i] = m.d[i].get_num();
    }
    return out;
}

QMat to_rational(const IMat& m) {
    QMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.d.size(); ++i) out.d[i] = Rational(m.d[i]);
    return out;
}

SubLattice saturate(const IMat& b) {
    QMat null = nullspace(to_rational(b));  // columns span the orthogonal complement of the row span
    if (null.cols == 0) return {b.cols, IMat::identity(b.cols)};
    return integer_kernel(null);
}

bool is_saturated(const IMat& b) {
    for (const auto& d : elementary_divisors(b))
        if (d != 1) return false;
    return true;
}

QMat restrict_form(const IMat& basis, const QMat& form) {
    QMat b = to_rational(basis);
    return b * form * b.transpose();
}

namespace {

// q(x) = sum_i qd[i] (x_i + sum_{j>i} qu[i][j] x_j)^2
struct Cholesky {
    std::vector<Rational> qd;
    QMat qu;
};

Cholesky rational_cholesky(const QMat& g) {
    size_t n = g.rows;
    QMat q = g;
    for (size_t i = 0; i < n; ++i) {
        if (sgn(q(i, i)) <= 0) throw NotPositiveDefinite("form is not positive definite");
        for (size_t j = i + 1; j < n; ++j) {
            q(j, i) = q(i, j);
            q(i, j) = q(i, j) / q(i, i);
        }
        for (size_t k = i + 1; k < n; ++k)
            for (size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
    }
    Cholesky c;
    c.qd.resize(n);
    c.qu = QMat(n, n);
    for (size_t i = 0; i < n; ++i) {
        c.qd[i] = q(i, i);
        for (size_t j = i + 1; j < n; ++j) c.qu(i, j) = q(i, j);
    }
    return c;
}

Integer floor_q(const Rational& x) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return f;
}

bool canonical_sign(std::vector<Integer>& v) {
    for (auto& x : v) {
        if (sgn(x) == 0) continue;
        if (sgn(x) < 0)
            for (auto& y : v) y = -y;
        return true;
    }
    return false;
}

}  // namespace

std::vector<std::vector<Integer>> enumerate_short(const QMat& gram, const Rational& bound) {
    size_t n = gram.rows;
    Cholesky ch = rational_cholesky(gram);
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> x(n);
    std::function<void(size_t, const Rational&)> rec = [&](size_t i1, const Rational& rem) {
        size_t i = i1 - 1;
        Rational c = 0;
        for (size_t j = i + 1; j < n; ++j) c += ch.qu(i, j) * x[j];
        Rational r = rem / ch.qd[i];
        Integer s = isqrt_floor(r);
        Integer lo = floor_q(-c) - s - 1, hi = floor_q(-c) + s + 2;
        for (Integer v = lo; v <= hi; ++v) {
            Rational t = v + c;
            Rational used = ch.qd[i] * t * t;
            if (used > rem) continue;
            x[i] = v;
            if (i == 0) {
                std::vector<Integer> y = x;
                if (canonical_sign(y) && y == x) out.push_back(y);
            } else {
                rec(i, rem - used);
            }
        }
        x[i] = 0;
    };
    if (n > 0) rec(n, bound);
    std::sort(out.begin(), out.end());
    return out;
}

ShortestVectors shortest_vectors(const QMat& gram) {
    if (gram.rows == 0) throw std::invalid_argument("rank-0 lattice has no shortest vectors");
    rational_cholesky(gram);  // positivity check
    Rational bound = gram(0, 0);
    for (size_t i = 1; i < gram.rows; ++i)
        if (gram(i, i) < bound) bound = gram(i, i);
    auto cands = enumerate_short(gram, bound);
    auto norm = [&](const std::vector<Integer>& v) {
        Rational s = 0;
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j) s += gram(i, j) * v[i] * v[j];
        return s;
    };
    ShortestVectors res;
    res.min_norm = bound;
    for (const auto& v : cands) {
        Rational nv = norm(v);
        if (nv < res.min_norm) res.min_norm = nv;
    }
    for (const auto& v : cands)
        if (norm(v) == res.min_norm) res.vectors.push_back(v);
    return res;
}

ShortestVectors shortest_vectors(const SubLattice& l, const QMat& form) {
    return shortest_vectors(restrict_form(l.basis, form));
}

IntLattice lattice_U(long n) {
    QMat g(2, 2);
    g(0, 1) = g(1, 0) = n;
    return {n == 1 ? "U" : "U(" + std::to_string(n) + ")", g};
}

IntLattice lattice_D4minus() {
    QMat g = hurwitz_gram();
    for (auto& x : g.d) x *= -2;
    return {"D4minus", g};
}

IntLattice orthogonal_sum(const std::vector<IntLattice>& parts) {
    std::vector<QMat> blocks;
    std::string name;
    for (const auto& p : parts) {
        blocks.push_back(p.gram);
        name += (name.empty() ? "" : "+") + p.name;
    }
    return {name, block_diag(blocks)};
}

IntLattice named_lattice(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "U") return lattice_U(1);
    if (s == "D4minus" || s == "D4(-1)") return lattice_D4minus();
    std::smatch m;
    static const std::regex un(R"(U\(?(\d+)\)?)");
    if (std::regex_match(s, m, un)) return lattice_U(std::stol(m[1]));
    throw UnknownName("unknown lattice name '" + raw + "'");
}

}  // namespace ks

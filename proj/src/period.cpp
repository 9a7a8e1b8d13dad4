#include "ks/period.hpp"

namespace ks {

namespace {

QEMat to_quad(const QMat& m) {
    return m.map([](const Rational& x) { return QuadExt(x); });
}

GaussQuad gi() { return GaussQuad::I(); }

GQVec add(const GQVec& a, const GQVec& b) {
    GQVec c(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

bool leading_minors_positive(const GQMat& h) {
    for (size_t k = 1; k <= h.rows; ++k) {
        std::vector<size_t> idx(k);
        for (size_t t = 0; t < k; ++t) idx[t] = t;
        GaussQuad det = determinant(h.select(idx, idx));
        if (!det.is_real() || qe_sign(det.re) <= 0) return false;
    }
    return true;
}

}  // namespace

QuadExt bilinear(const QMat& gram, const std::vector<QuadExt>& u, const std::vector<QuadExt>& v) {
    if (u.size() != gram.rows || v.size() != gram.rows) throw DimensionMismatch("period point coordinates");
    QuadExt s;
    for (size_t i = 0; i < gram.rows; ++i)
        for (size_t j = 0; j < gram.cols; ++j)
            if (sgn(gram(i, j))) s += u[i] * QuadExt(gram(i, j)) * v[j];
    return s;
}

void validate(const PeriodPoint& p, const QMat& gram) {
    if (bilinear(gram, p.e1, p.e1) != QuadExt(1) || bilinear(gram, p.e2, p.e2) != QuadExt(1) ||
        !is_zero(bilinear(gram, p.e1, p.e2)))
        throw NotOrthonormal("e1, e2 must satisfy q(e1) = q(e2) = 1 and b(e1, e2) = 0");
}

PeriodPoint conjugate(const PeriodPoint& p) {
    PeriodPoint q = p;
    for (auto& x : q.e2) x = -x;
    return q;
}

PeriodPoint reference_omega() {
    PeriodPoint p{std::vector<QuadExt>(8), std::vector<QuadExt>(8)};
    p.e1[0] = p.e1[1] = QuadExt(0, rat(1, 2));  // 1/sqrt2
    p.e2[2] = p.e2[3] = QuadExt(rat(-1, 2));
    return p;
}

CElemR j_element(const TSetup& t, const PeriodPoint& p) {
    validate(p, t.clT->bilinear());
    return CElemR::vec(t.clT, p.e1) * CElemR::vec(t.clT, p.e2);
}

QEMat left_action_quad(const LambdaRe& lam, const CElemR& x) {
    CElemQ xa(x.alg), xb(x.alg);
    for (const auto& [m, v] : x.c) {
        if (sgn(v.a)) xa.c[m] = v.a;
        if (sgn(v.b)) xb.c[m] = v.b;
    }
    QEMat A = to_quad(left_action(lam, xa));
    QEMat B = to_quad(left_action(lam, xb));
    return A + scale(QuadExt::sqrt2(), B);
}

bool spin_check(const CElemR& x) {
    if (x.is_zero()) throw NotInvertible("zero element");
    if (!x.is_even()) return false;
    CElemR xt = transpose(x);
    // x^- = x for even x
    if (x * xt != CElemR::one(x.alg)) return false;
    for (size_t i = 0; i < x.alg->n(); ++i) {
        CElemR w = x * CElemR::gen(x.alg, i) * xt;
        for (const auto& [m, v] : w.c)
            if (popcount(m) != 1) return false;
    }
    return true;
}

bool is_positive_definite(const QEMat& sym) {
    QEMat m = sym;
    size_t n = m.rows;
    for (size_t k = 0; k < n; ++k) {
        if (qe_sign(m(k, k)) <= 0) return false;
        QuadExt inv = m(k, k).inv();
        for (size_t i = k + 1; i < n; ++i) {
            if (is_zero(m(i, k))) continue;
            QuadExt f = m(i, k) * inv;
            for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return true;
}

GQMat to_gauss(const QEMat& m) {
    return m.map([](const QuadExt& x) { return GaussQuad(x); });
}

GQMat eigenbasis(const QEMat& J) {
    GQMat A = to_gauss(J);
    for (size_t i = 0; i < A.rows; ++i) A(i, i) -= gi();
    return nullspace(A);
}

Standardized standardize_rep(const GQMat& eig, const RepPhiRe& phi, const std::array<QuatQ, 4>& r, size_t choice) {
    Standardized s;
    Coordinatizer<GaussQuad> co(eig);
    size_t n = eig.cols;
    for (size_t j = 0; j < 4; ++j) {
        GQMat NE = to_gauss(to_quad(to_rational(phi.N[j]))) * eig;
        GQMat M(n, n);
        for (size_t c = 0; c < n; ++c) M.set_col(c, co.coords_or_throw(NE.col(c), "N_j does not preserve the eigenspace"));
        s.M[j] = M;
    }
    // vec(Q M_j) - vec(P_j Q) = 0, Q row-major
    size_t nn = n * n;
    GQMat A(3 * nn, nn);
    for (size_t j = 1; j < 4; ++j) {
        GQMat P = chi_kron(r[j], n / 2);
        size_t off = (j - 1) * nn;
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                size_t row = off + a * n + b;
                for (size_t k = 0; k < n; ++k) {
                    A(row, a * n + k) += s.M[j](k, b);
                    A(row, k * n + b) -= P(a, k);
                }
            }
    }
    GQMat K = nullspace(A);
    s.kernel_dim = K.cols;
    if (K.cols == 0) throw NoInvertibleKernelElement("the intertwiner space is zero");
    // Deterministic search: coefficients (k+1)^t, then alternating signs.
    size_t tried = 0;
    for (int alt = 0; alt < 2; ++alt)
        for (int t = 0; t < 8; ++t) {
            if (tried++ < choice) continue;
            std::vector<GaussQuad> c(K.cols);
            for (size_t k = 0; k < K.cols; ++k) {
                Integer v = 1;
                for (int e = 0; e < t; ++e) v *= Integer(k + 1);
                if (alt && (k % 2)) v = -v;
                c[k] = GaussQuad(Rational(v));
            }
            std::vector<GaussQuad> q = mat_vec(K, c);
            GQMat Q(n, n, q);
            if (is_zero(determinant(Q))) continue;
            s.Q = Q;
            GQMat Qi = inverse(Q);
            s.verified = true;
            for (size_t j = 0; j < 4; ++j)
                if (Q * s.M[j] * Qi != chi_kron(r[j], n / 2)) s.verified = false;
            return s;
        }
    throw NoInvertibleKernelElement("no nonsingular intertwiner among the tried combinations");
}

Frame parse_frame(const std::string& s) {
    if (s == "rational") return Frame::Rational;
    if (s == "sqrt") return Frame::Sqrt;
    throw std::invalid_argument("unknown frame '" + s + "' (rational, sqrt)");
}

std::string to_string(Frame f) { return f == Frame::Rational ? "rational" : "sqrt"; }

Mat<QuatR> normalization_frame(const QuatMatT& T, Frame f) {
    if (T.rows != 4 || T.cols != 4) throw NormalizationImpossible("T must be 4x4");
    Mat<QuatR> g(4, 4);
    for (size_t p = 0; p < 4; p += 2) {
        const QuatQ& t = T(p, p + 1);
        if (sgn(t.x) || sgn(t.y) || sgn(t.z) || !sgn(t.w) || T(p + 1, p) != -t || !is_zero(T(p, p)) ||
            !is_zero(T(p + 1, p + 1)))
            throw NormalizationImpossible("T is not in real 2x2 block form");
        for (size_t q = 0; q < 4; ++q)
            if (q / 2 != p / 2 && (!is_zero(T(p, q)) || !is_zero(T(p + 1, q))))
                throw NormalizationImpossible("T is not in real 2x2 block form");
        QuadExt tt(t.w), l(1);
        if (f == Frame::Sqrt) {
            try {
                l = qe_sqrt(qe_abs(tt)).inv();
            } catch (const NotASquare&) {
                throw NormalizationImpossible("|t| is not a square in Q(sqrt2)");
            }
        }
        QuadExt c = (QuadExt(2) * tt * l).inv();
        g(p, p) = QuatR(l);
        g(p, p + 1) = c * QuatR::i();
        g(p + 1, p) = l * QuatR::j();
        g(p + 1, p + 1) = c * QuatR::k();
    }
    Mat<QuatR> Tr = T.map([](const QuatQ& q) { return lift(q); });
    Mat<QuatR> target(4, 4);
    for (size_t i = 0; i < 4; ++i) target(i, i) = -QuatR::i();
    if (g * Tr * adjoint(g) != target) throw NormalizationImpossible("frame check g T g* = -i failed");
    return g;
}

GaussQuad cayley(const GaussQuad& x) {
    GaussQuad one(1);
    if (x == one) throw DivisionByZero("Cayley map at 1");
    return gi() * (one + x) / (one - x);
}

PeriodResult period_matrix(const PeriodContext& ctx, const PeriodPoint& p, Frame frame, size_t q_choice,
                           bool auto_sign) {
    const TSetup& t = ctx.ks.setup;
    const LambdaRe& lam = ctx.lam;
    PeriodResult res;
    CElemR je = j_element(t, p);
    res.j_spin = spin_check(je);
    QEMat J = left_action_quad(lam, je);
    size_t n = J.rows;
    res.j_squared = (J * J == scale(QuadExt(-1), QEMat::identity(n)));

    QEMat ME = to_quad(ctx.attr.ME);
    QEMat S = ME * J;
    QEMat sym = scale(QuadExt(rat(1, 2)), S + S.transpose());
    res.plus_positive = is_positive_definite(sym);
    res.minus_positive = is_positive_definite(-sym);
    res.j_sign = (auto_sign && !res.plus_positive && res.minus_positive) ? -1 : 1;
    if (res.j_sign < 0) J = -J;
    res.j_isometry = (J.transpose() * ME * J == ME);
    res.j_commutes = true;
    for (const auto& N : ctx.phi.N) {
        QEMat Nq = to_quad(to_rational(N));
        if (J * Nq != Nq * J) res.j_commutes = false;
    }

    GQMat eig = eigenbasis(J);
    res.eig_dim = eig.cols;
    Standardized st = standardize_rep(eig, ctx.phi, ctx.attr.ext.r, q_choice);
    res.q_kernel_dim = st.kernel_dim;
    res.q_verified = st.verified;

    Coordinatizer<GaussQuad> co(eig);
    GQMat Jg = to_gauss(J);
    std::array<GQVec, 4> xt;
    for (size_t i = 0; i < 4; ++i) {
        GQVec v(n, GaussQuad(0));
        v[4 * i] = GaussQuad(1);
        GQVec Jv = mat_vec(Jg, v);
        GQVec w(n);
        for (size_t k = 0; k < n; ++k) w[k] = GaussQuad(rat(1, 2)) * (v[k] - gi() * Jv[k]);
        GQVec mu = co.coords_or_throw(w, "projection outside the +i eigenspace");
        res.x[i] = mat_vec(st.Q, mu);
        QuatQ m = Rational(ctx.attr.ext.d[i]) * ctx.attr.multipliers[i];
        xt[i] = mat_vec(chi_kron(m.inv(), 4), res.x[i]);
    }

    Mat<QuatR> g = normalization_frame(ctx.attr.T, frame);
    res.frame_verified = true;
    GQMat U(4, 4), V(4, 4);
    for (size_t k = 0; k < 4; ++k) {
        GQVec xp(8, GaussQuad(0));
        for (size_t i = 0; i < 4; ++i)
            if (!is_zero(g(k, i))) xp = add(xp, mat_vec(chi_kron(g(k, i), 4), xt[i]));
        for (size_t r = 0; r < 4; ++r) U(r, k) = xp[r], V(r, k) = xp[4 + r];
    }
    if (is_zero(determinant(V))) {
        if (is_zero(determinant(U))) throw SingularV("both halves of the normalized frame are singular");
        std::swap(U, V);
        res.fallback_used = true;
    }
    res.Z = -(inverse(V) * U);
    res.antisymmetric = (res.Z.transpose() == -res.Z);
    GQMat Zc = res.Z.map([](const GaussQuad& z) { return z.conj(); });
    GQMat H = GQMat::identity(4) - res.Z * Zc.transpose();
    res.positive = leading_minors_positive(H);
    res.sparse = true;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            bool slot = (i / 2 == j / 2) && i != j;
            if (!slot && !is_zero(res.Z(i, j))) res.sparse = false;
        }
    if (res.sparse) res.a = res.Z(0, 1), res.b = res.Z(2, 3);
    return res;
}

bool in_unit_disc(const GaussQuad& z) { return qe_sign(QuadExt(1) - z.abs2()) > 0; }

bool ScanEntry::pass() const {
    return result.sparse && result.antisymmetric && result.positive && a_in_disc && b_in_disc;
}

std::vector<PeriodPoint> default_scan_points() {
    auto pt = [] { return PeriodPoint{std::vector<QuadExt>(8), std::vector<QuadExt>(8)}; };
    std::vector<PeriodPoint> pts;
    // e1 = (f1 + t f2)/sqrt(2t), e2 = -(f3 + f4)/2 for t = 2, 4
    PeriodPoint p2 = pt();
    p2.e1[0] = QuadExt(rat(1, 2)), p2.e1[1] = QuadExt(1);
    p2.e2[2] = p2.e2[3] = QuadExt(rat(-1, 2));
    pts.push_back(p2);
    PeriodPoint p4 = pt();
    p4.e1[0] = QuadExt(0, rat(1, 4)), p4.e1[1] = QuadExt(0, 1);
    p4.e2[2] = p4.e2[3] = QuadExt(rat(-1, 2));
    pts.push_back(p4);
    // e1 = (f1 + f2)/sqrt2, e2 = -(f3 + 2 f4)/(2 sqrt2)
    PeriodPoint q = pt();
    q.e1[0] = q.e1[1] = QuadExt(0, rat(1, 2));
    q.e2[2] = QuadExt(0, rat(-1, 4)), q.e2[3] = QuadExt(0, rat(-1, 2));
    pts.push_back(q);
    return pts;
}

std::vector<ScanEntry> rank18_scan(const PeriodContext& ctx, const std::vector<PeriodPoint>& pts, Frame frame) {
    std::vector<ScanEntry> out;
    size_t shift = ctx.ks.setup.shift;
    for (const auto& p : pts) {
        for (size_t i = shift; i < p.e1.size(); ++i)
            if (!is_zero(p.e1[i]) || !is_zero(p.e2[i]))
                throw std::invalid_argument("scan point is not in the U + U(2) part");
        ScanEntry e{p, period_matrix(ctx, p, frame), false, false, std::nullopt, std::nullopt};
        if (e.result.sparse) {
            e.a_in_disc = in_unit_disc(*e.result.a);
            e.b_in_disc = in_unit_disc(*e.result.b);
            if (*e.result.a != GaussQuad(1)) e.fa = cayley(*e.result.a);
            if (*e.result.b != GaussQuad(1)) e.fb = cayley(*e.result.b);
        }
        out.push_back(std::move(e));
    }
    return out;
}

RankCheck rank_check_Tprime(const KSData& ks) {
    const AlgPtr& alg = ks.setup.clUU2;
    RankCheck rc{};
    QMat stacked(0, alg->dim());
    std::vector<std::vector<Rational>> even_rows;
    for (size_t i = 0; i < 4; ++i)
        for (int par = 0; par < 2; ++par) {
            std::vector<Mask> ms = par ? alg->odd_monomials() : alg->even_monomials();
            IMat rows(ms.size(), alg->dim());
            for (size_t k = 0; k < ms.size(); ++k) {
                CElemQ v = CElemQ::mono(alg, ms[k]) * ks.x[i].elem;
                for (const auto& [m, c] : v.c) rows(k, m) = c.get_num();
                if (!par) even_rows.push_back(v.coords());
            }
            size_t r = saturate(rows).rank();
            (par ? rc.odd : rc.even)[i] = r;
        }
    rc.even_total = rank(QMat::from_rows(even_rows));
    return rc;
}

ReferenceTarget reference_target() {
    return {QuadExt(rat(8193, 8191), rat(-128, 8191)), QuadExt(rat(524289, 524287), rat(-1024, 524287))};
}

std::pair<bool, bool> match_target(const GaussQuad& a, const GaussQuad& b, const ReferenceTarget& t) {
    std::pair<bool, bool> best{false, false};
    int best_n = -1;
    for (int s : {1, -1}) {
        GaussQuad ea(QuadExt(s) * t.a), eb(QuadExt(s) * t.b);
        std::pair<bool, bool> m{a == ea, b == eb};
        int nm = int(m.first) + int(m.second);
        if (nm > best_n) best = m, best_n = nm;
    }
    return best;
}

}  // namespace ks

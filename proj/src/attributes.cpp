#include "ks/attributes.hpp"

#include <algorithm>

namespace ks {

namespace {

QMat quat_columns(const std::array<QuatQ, 4>& b) {
    QMat m(4, 4);
    for (size_t c = 0; c < 4; ++c) {
        auto co = b[c].coeffs();
        for (size_t r = 0; r < 4; ++r) m(r, c) = co[r];
    }
    return m;
}

std::vector<Rational> quat_vec(const QuatQ& q) {
    auto c = q.coeffs();
    return {c.begin(), c.end()};
}

int cmp_quat(const QuatQ& a, const QuatQ& b) {
    auto x = a.coeffs(), y = b.coeffs();
    for (size_t t = 0; t < 4; ++t) {
        int c = cmp(x[t], y[t]);
        if (c) return c;
    }
    return 0;
}

}  // namespace

QuatModule make_module(std::string name, const std::array<QuatQ, 4>& basis) {
    QuatModule m{std::move(name), basis, QMat(4, 4)};
    for (size_t a = 0; a < 4; ++a)
        for (size_t b = 0; b < 4; ++b) m.gram(a, b) = (basis[a] * basis[b].conj()).w;
    if (rank(quat_columns(basis)) != 4) throw std::invalid_argument("module basis is not of rank 4");
    return m;
}

QuatModule module_I6() {
    QuatQ h = hurwitz_h(), i = QuatQ::i(), j = QuatQ::j(), k = QuatQ::k();
    return make_module("I6", {h + i, h + j, i + j, k});
}

QuatModule module_I12() { return make_module("I12", hurwitz_basis()); }

std::optional<std::vector<Rational>> module_coords(const QuatModule& m, const QuatQ& q) {
    return solve(quat_columns(m.basis), quat_vec(q));
}

bool module_contains(const QuatModule& m, const QuatQ& q) {
    auto c = module_coords(m, q);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& x) { return is_integral(x); });
}

bool module_equal(const QuatModule& a, const QuatModule& b) {
    for (const auto& q : a.basis)
        if (!module_contains(b, q)) return false;
    for (const auto& q : b.basis)
        if (!module_contains(a, q)) return false;
    return true;
}

QuatModule right_multiply(const QuatModule& m, const QuatQ& h) {
    std::array<QuatQ, 4> b;
    for (size_t t = 0; t < 4; ++t) b[t] = m.basis[t] * h;
    return make_module(m.name, b);
}

bool left_closed(const QuatModule& m, const std::vector<QuatQ>& ring) {
    for (const auto& r : ring)
        for (const auto& q : m.basis)
            if (!module_contains(m, r * q)) return false;
    return true;
}

MinimalVectors minimal_vectors(const QuatModule& m) {
    ShortestVectors sv = shortest_vectors(m.gram);
    MinimalVectors out{sv.min_norm, {}};
    for (const auto& c : sv.vectors) {
        QuatQ q;
        for (size_t t = 0; t < 4; ++t) q += Rational(c[t]) * m.basis[t];
        out.vectors.push_back(q);
    }
    return out;
}

std::optional<QuatQ> module_isomorphic(const QuatModule& m, const QuatModule& n) {
    MinimalVectors um = minimal_vectors(m), vn = minimal_vectors(n);
    if (um.vectors.size() != vn.vectors.size()) return std::nullopt;
    for (const auto& u : um.vectors) {
        QuatQ ui = u.inv();
        for (const auto& v : vn.vectors) {
            QuatQ h = ui * v;
            if (module_equal(right_multiply(m, h), n)) return h;
        }
    }
    return std::nullopt;
}

size_t epsilon_diag_position(const TSetup& t, size_t eps_index) {
    return eps_index < 4 ? t.split.plus_rows[eps_index] : t.split.minus_rows[eps_index - 4];
}

ExtractedModules extract_modules(const KSData& ks, const LambdaRe& lam, const RepPhiRe& phi) {
    ExtractedModules ex;
    size_t c = epsilon_diag_position(ks.setup, lam.index);
    for (size_t j = 0; j < 4; ++j) {
        QuatMat m = ks.setup.repT.eval(phi.htilde[j]);
        ex.r[j] = m(c, c).conj();
    }
    size_t nblocks = lam.basis.size() / 4;
    if (nblocks != 4) throw DimensionMismatch("expected four blocks");
    for (size_t b = 0; b < 4; ++b) {
        size_t o = 4 * b;
        IMat Mx(4, 4);
        for (size_t a = 0; a < 4; ++a)
            for (size_t j = 0; j < 4; ++j) Mx(a, j) = phi.N[j](o + a, o);
        ex.divisors[b] = elementary_divisors(Mx);
        if (ex.divisors[b].size() != 4) throw InconsistentSolve("block columns N_j e are dependent");
        ex.d[b] = ex.divisors[b].back();
        QMat Mq = to_rational(Mx);
        std::array<QuatQ, 4> basis;
        for (size_t a = 0; a < 4; ++a) {
            std::vector<Rational> target(4, Rational(0));
            target[a] = Rational(ex.d[b]);
            auto cs = solve(Mq, target);
            if (!cs) throw InconsistentSolve("vector of d L_i outside the span of the N_j e");
            QuatQ q;
            for (size_t j = 0; j < 4; ++j) q += (*cs)[j] * ex.r[j];
            basis[a] = q;
        }
        ex.mods[b] = make_module("M" + std::to_string(b + 1), basis);
    }
    return ex;
}

TraceDomain parse_trace_domain(const std::string& s) {
    if (s == "matrix_rep") return TraceDomain::MatrixRep;
    if (s == "cl_even") return TraceDomain::ClEven;
    if (s == "cl_full") return TraceDomain::ClFull;
    throw std::invalid_argument("unknown trace domain '" + s + "' (matrix_rep, cl_even, cl_full)");
}

std::string to_string(TraceDomain d) {
    switch (d) {
        case TraceDomain::MatrixRep: return "matrix_rep";
        case TraceDomain::ClEven: return "cl_even";
        case TraceDomain::ClFull: return "cl_full";
    }
    return "";
}

CElemQ alpha_default(const TSetup& t) {
    auto f = [&](size_t i) { return CElemQ::gen(t.clT, i); };
    return (f(0) + f(1)) * (f(2) + f(3));
}

CElemQ alpha_alternative(const TSetup& t) {
    auto f = [&](size_t i) { return CElemQ::gen(t.clT, i); };
    return (f(0) + f(1)) * (f(0) - f(1));
}

QMat polarization_form(const KSData& ks, const LambdaRe& lam, const CElemQ& alpha, TraceDomain dom) {
    const auto& rep = ks.setup.repT;
    size_t n = lam.basis.size();
    QMat ME(n, n);
    std::vector<CElemQ> left(n);
    for (size_t h = 0; h < n; ++h) left[h] = alpha * transpose(lam.basis[h]);
    if (dom == TraceDomain::MatrixRep) {
        std::vector<QuatMat> A(n), B(n);
        for (size_t h = 0; h < n; ++h) A[h] = rep.eval(left[h]), B[h] = rep.eval(lam.basis[h]);
        size_t D = rep.dim;
        for (size_t h = 0; h < n; ++h)
            for (size_t l = 0; l < n; ++l) {
                Rational t = 0;
                for (size_t a = 0; a < D; ++a)
                    for (size_t b = 0; b < D; ++b) {
                        const QuatQ& x = A[h](a, b);
                        const QuatQ& y = B[l](b, a);
                        t += x.w * y.w - x.x * y.x - x.y * y.y - x.z * y.z;
                    }
                ME(h, l) = t;
            }
        return ME;
    }
    // Trace of left multiplication by e_R on Cl+ or on all of Cl.
    const auto& alg = ks.setup.clT;
    std::vector<Rational> tau(alg->dim(), Rational(0));
    for (Mask r = 0; r < alg->dim(); ++r)
        for (Mask s = 0; s < alg->dim(); ++s) {
            if (dom == TraceDomain::ClEven && parity(s)) continue;
            for (const auto& [u, w] : alg->mono(r, s))
                if (u == s) tau[r] += w;
        }
    for (size_t h = 0; h < n; ++h)
        for (size_t l = 0; l < n; ++l) {
            CElemQ x = left[h] * lam.basis[l];
            Rational t = 0;
            for (const auto& [m, v] : x.c) t += v * tau[m];
            ME(h, l) = t;
        }
    return ME;
}

namespace {

QuatQ s_vec(const std::array<QuatModule, 4>& mods, const std::array<QuatQ, 4>& mult, size_t h) {
    return mods[h / 4].basis[h % 4] * mult[h / 4];
}

}  // namespace

QuatMatT solve_T(const std::array<QuatModule, 4>& mods, const std::array<QuatQ, 4>& mult, const QMat& ME) {
    const std::array<QuatQ, 4> units{QuatQ(1), QuatQ::i(), QuatQ::j(), QuatQ::k()};
    QuatMatT T(4, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            QMat A(16, 4);
            std::vector<Rational> rhs(16);
            for (size_t a = 0; a < 4; ++a)
                for (size_t b = 0; b < 4; ++b) {
                    QuatQ sa = s_vec(mods, mult, 4 * i + a), sb = s_vec(mods, mult, 4 * j + b).conj();
                    for (size_t u = 0; u < 4; ++u) A(4 * a + b, u) = 2 * (sa * units[u] * sb).w;
                    rhs[4 * a + b] = ME(4 * i + a, 4 * j + b);
                }
            auto c = solve(A, rhs);
            if (!c) throw InconsistentSolve("no T entry at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            T(i, j) = QuatQ((*c)[0], (*c)[1], (*c)[2], (*c)[3]);
        }
    if (!verify_T(mods, mult, ME, T)) throw InconsistentSolve("T does not reproduce M_E");
    return T;
}

bool verify_T(const std::array<QuatModule, 4>& mods, const std::array<QuatQ, 4>& mult, const QMat& ME,
              const QuatMatT& T) {
    for (size_t h = 0; h < 16; ++h)
        for (size_t l = 0; l < 16; ++l) {
            QuatQ v = s_vec(mods, mult, h) * T(h / 4, l / 4) * s_vec(mods, mult, l).conj();
            if (2 * v.w != ME(h, l)) return false;
        }
    return true;
}

bool is_skew_hermitian(const QuatMatT& T) {
    for (size_t i = 0; i < T.rows; ++i)
        for (size_t j = 0; j < T.cols; ++j)
            if (T(i, j).conj() != -T(j, i)) return false;
    return true;
}

QuatMatT canonical_T(const QuatMatT& T) {
    auto key_less = [](const QuatMatT& a, const QuatMatT& b) {
        for (size_t t = 0; t < a.d.size(); ++t) {
            int c = cmp_quat(a.d[t], b.d[t]);
            if (c) return c < 0;
        }
        return false;
    };
    QuatMatT best = T;
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
            std::vector<size_t> p{0, 1, 2, 3};
            if (s1) std::swap(p[0], p[1]);
            if (s2) std::swap(p[2], p[3]);
            QuatMatT c = T.select(p, p);
            if (key_less(c, best)) best = c;
        }
    return best;
}

AttributeReport compute_attributes(const KSData& ks, const LambdaRe& lam, const RepPhiRe& phi,
                                   const CElemQ& alpha, TraceDomain dom) {
    AttributeReport rep;
    rep.ext = extract_modules(ks, lam, phi);
    QuatModule I6 = module_I6(), I12 = module_I12();
    for (size_t b = 0; b < 4; ++b) {
        const QuatModule& m = rep.ext.mods[b];
        rep.minima[b] = minimal_vectors(m);
        if (auto h = module_isomorphic(m, I6)) {
            rep.match[b] = "I6";
            rep.multipliers[b] = *h;
        } else if (auto h2 = module_isomorphic(m, I12)) {
            rep.match[b] = "I12";
            rep.multipliers[b] = *h2;
        } else {
            rep.match[b] = "";
            rep.multipliers[b] = QuatQ(1);
        }
    }
    rep.alpha = alpha;
    rep.domain = dom;
    rep.ME = polarization_form(ks, lam, alpha, dom);
    rep.T = solve_T(rep.ext.mods, rep.multipliers, rep.ME);
    rep.T_verified = verify_T(rep.ext.mods, rep.multipliers, rep.ME, rep.T);
    rep.T_canonical = canonical_T(rep.T);
    return rep;
}

}  // namespace ks

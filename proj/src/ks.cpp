#include "ks/ks.hpp"

namespace ks {

bool is_pseudo_idempotent(const PseudoIdempotent& p) {
    return p.elem * p.elem == Rational(p.scale) * p.elem;
}

std::array<PseudoIdempotent, 4> build_x_idempotents(const AlgPtr& a) {
    auto f = [&](size_t i) { return CElemQ::gen(a, i); };
    CElemQ one = CElemQ::one(a);
    CElemQ x1 = f(2) * f(0) * f(1) * f(3);
    CElemQ x2 = Rational(4) * (f(0) * f(1)) - x1;
    CElemQ x3 = Rational(2) * (f(2) * f(3)) - x1;
    CElemQ x4 = Rational(8) * one - x1 - x2 - x3;
    return {{{x1, 8}, {x2, 8}, {x3, 8}, {x4, 8}}};
}

CElemQ solve_H(const GradedRep& rep) {
    const auto& alg = rep.source;
    std::vector<Mask> ev = alg->even_monomials();
    size_t n2 = rep.dim * rep.dim;
    QMat A(4 * n2, ev.size());
    for (size_t k = 0; k < ev.size(); ++k) {
        const QuatMat& m = rep.monomials[ev[k]];
        for (size_t t = 0; t < n2; ++t) {
            A(4 * t, k) = m.d[t].w;
            A(4 * t + 1, k) = m.d[t].x;
            A(4 * t + 2, k) = m.d[t].y;
            A(4 * t + 3, k) = m.d[t].z;
        }
    }
    std::vector<Rational> b(4 * n2, Rational(0));
    for (size_t r = 0; r < rep.dim; ++r) b[4 * (r * rep.dim + r)] = rep.grading[r] > 0 ? -2 : 2;
    auto c = solve(A, b);
    if (!c) throw NoIntegralSolution("phi(H) = diag(-2, 2) has no solution on the even part");
    CElemQ H(alg);
    for (size_t k = 0; k < ev.size(); ++k) {
        if (!is_integral((*c)[k])) throw NoIntegralSolution("H has non-integral coefficients");
        if (!is_zero((*c)[k])) H.c[ev[k]] = (*c)[k];
    }
    if (H * H != Rational(4) * CElemQ::one(alg)) throw NoIntegralSolution("H^2 != 4");
    return H;
}

std::array<PseudoIdempotent, 2> build_y_idempotents(const GradedRep& repD4) {
    CElemQ H = solve_H(repD4);
    CElemQ two = Rational(2) * CElemQ::one(repD4.source);
    return {{{two - H, 4}, {two + H, 4}}};
}

std::array<PseudoIdempotent, 8> build_epsilons(const TSetup& t, const std::array<PseudoIdempotent, 4>& x,
                                              const std::array<PseudoIdempotent, 2>& y) {
    std::array<PseudoIdempotent, 8> out;
    for (size_t i = 0; i < 8; ++i) {
        auto [a, b] = kEpsilonPairs[i];
        out[i] = {embed(x[a].elem, t.clT, 0) * embed(y[b].elem, t.clT, t.shift), x[a].scale * y[b].scale};
    }
    return out;
}

std::vector<CElemQ> KernelGens::all() const {
    std::vector<CElemQ> v = even;
    v.insert(v.end(), odd.begin(), odd.end());
    return v;
}

KernelGens kernel_generators(const PseudoIdempotent& p) {
    const AlgPtr& alg = p.elem.alg;
    CElemQ op = Rational(p.scale) * CElemQ::one(alg) - p.elem;
    if (!op.is_even()) throw std::invalid_argument("kernel_generators needs an even pseudo-idempotent");
    KernelGens out;
    for (int par = 0; par < 2; ++par) {
        std::vector<Mask> basis = par ? alg->odd_monomials() : alg->even_monomials();
        std::vector<size_t> pos(alg->dim(), 0);
        for (size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = k;
        QMat A(basis.size(), basis.size());
        for (size_t k = 0; k < basis.size(); ++k) {
            CElemQ r = CElemQ::mono(alg, basis[k]) * op;
            for (const auto& [m, v] : r.c) A(k, pos[m]) = v;
        }
        SubLattice ker = integer_kernel(A);
        auto& dst = par ? out.odd : out.even;
        for (size_t r = 0; r < ker.rank(); ++r) {
            CElemQ e(alg);
            for (size_t k = 0; k < basis.size(); ++k)
                if (sgn(ker.basis(r, k))) e.c[basis[k]] = Rational(ker.basis(r, k));
            dst.push_back(e);
        }
    }
    return out;
}

KSData build_ks() {
    KSData k;
    k.setup = build_T_setup();
    k.x = build_x_idempotents(k.setup.clUU2);
    k.H = solve_H(k.setup.repD4);
    k.y = build_y_idempotents(k.setup.repD4);
    k.eps = build_epsilons(k.setup, k.x, k.y);
    for (size_t i = 0; i < 4; ++i) k.xker[i] = kernel_generators(k.x[i]);
    for (size_t i = 0; i < 2; ++i) k.yker[i] = kernel_generators(k.y[i]);
    return k;
}

LambdaRe build_lambda(const KSData& ks, size_t i) {
    if (i >= 8) throw std::out_of_range("epsilon index must be 1..8");
    const TSetup& t = ks.setup;
    auto [a, b] = kEpsilonPairs[i];
    std::vector<CElemQ> Ls = ks.xker[a].all();
    LambdaRe lam;
    lam.index = i;
    for (size_t s = 0; s < Ls.size(); ++s) {
        bool odd = s >= ks.xker[a].even.size();
        const auto& Ks = odd ? ks.yker[b].odd : ks.yker[b].even;
        size_t w0 = odd ? ks.yker[b].even.size() : 0;
        CElemQ L = embed(Ls[s], t.clT, 0);
        for (size_t w = 0; w < Ks.size(); ++w) {
            lam.basis.push_back(L * embed(Ks[w], t.clT, t.shift));
            lam.labels.emplace_back(s, w0 + w);
        }
    }
    QMat cols(t.clT->dim(), lam.basis.size());
    IMat rows(lam.basis.size(), t.clT->dim());
    for (size_t k = 0; k < lam.basis.size(); ++k)
        for (const auto& [m, v] : lam.basis[k].c) {
            cols(m, k) = v;
            rows(k, m) = v.get_num();
        }
    lam.coord = Coordinatizer<Rational>(cols);
    lam.saturated = is_saturated(rows);
    return lam;
}

std::optional<std::vector<Rational>> lambda_coords(const LambdaRe& lam, const CElemQ& v) {
    return lam.coord.coords(v.coords());
}

std::array<CElemQ, 4> build_htilde(const TSetup& t) {
    auto h = [&](size_t w) { return CElemQ::gen(t.clT, t.shift + w); };
    CElemQ hm2 = Rational(2) * h(0) - h(1) - h(2) - h(3);
    return {CElemQ::one(t.clT), hm2 * h(0), hm2 * h(1), hm2 * h(2)};
}

RepPhiRe build_phi_re(const KSData& ks, const LambdaRe& lam) {
    RepPhiRe phi;
    phi.htilde = build_htilde(ks.setup);
    size_t n = lam.basis.size();
    for (size_t j = 0; j < 4; ++j) {
        IMat N(n, n);
        for (size_t k = 0; k < n; ++k) {
            auto c = lambda_coords(lam, lam.basis[k] * phi.htilde[j]);
            if (!c) throw NotIntegral("right multiplication leaves the rational span");
            for (size_t r = 0; r < n; ++r) {
                if (!is_integral((*c)[r])) throw NotIntegral("right multiplication is not integral on the lattice");
                N(r, k) = (*c)[r].get_num();
            }
        }
        phi.N[j] = N;
    }
    return phi;
}

bool is_block_diagonal(const IMat& m, size_t block) {
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j)
            if (i / block != j / block && sgn(m(i, j))) return false;
    return true;
}

bool spans_primitive_rank4(const RepPhiRe& phi) {
    size_t n2 = phi.N[0].d.size();
    IMat flat(4, n2);
    for (size_t j = 0; j < 4; ++j)
        for (size_t t = 0; t < n2; ++t) flat(j, t) = phi.N[j].d[t];
    auto dv = elementary_divisors(flat);
    if (dv.size() != 4) return false;
    for (const auto& d : dv)
        if (d != 1) return false;
    return true;
}

QMat left_action(const LambdaRe& lam, const CElemQ& a) {
    size_t n = lam.basis.size();
    QMat L(n, n);
    for (size_t k = 0; k < n; ++k) {
        auto c = lambda_coords(lam, a * lam.basis[k]);
        if (!c) throw std::domain_error("left multiplication leaves the rational span of the lattice");
        L.set_col(k, *c);
    }
    return L;
}

bool commutes_with_left_action(const KSData& ks, const LambdaRe& lam, const RepPhiRe& phi) {
    const AlgPtr& alg = ks.setup.clT;
    for (size_t i = 0; i < alg->n(); ++i)
        for (size_t j = i + 1; j < alg->n(); ++j) {
            QMat L = left_action(lam, CElemQ::gen(alg, i) * CElemQ::gen(alg, j));
            for (const auto& N : phi.N) {
                QMat Nq = to_rational(N);
                if (L * Nq != Nq * L) return false;
            }
        }
    return true;
}

}  // namespace ks

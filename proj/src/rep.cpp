#include "ks/rep.hpp"

namespace ks {

GradedRep rep_U(AlgPtr clU, long n) {
    QuatMat f1(2, 2), f2(2, 2);
    f1(0, 1) = QuatQ(1);
    f2(1, 0) = QuatQ(2 * n);
    return extend_by_flca(std::move(clU), {f1, f2}, {1, -1});
}

GradedRep rep_D4minus(AlgPtr clD4) {
    std::vector<QuatMat> gens;
    for (const auto& z : hurwitz_basis()) {
        QuatMat m(2, 2);
        m(0, 1) = z;
        m(1, 0) = Rational(-2) * z.conj();
        gens.push_back(m);
    }
    return extend_by_flca(std::move(clD4), gens, {1, -1});
}

GradedRep graded_kronecker(const GradedRep& r1, const GradedRep& r2) {
    Glued g = glue(*r1.source, *r2.source);
    QuatMat id2 = quat_identity(r2.dim);
    QuatMat eps1 = r1.grading_matrix();
    std::vector<QuatMat> gens;
    for (const auto& m : r1.gens) gens.push_back(kron(m, id2));
    for (const auto& m : r2.gens) gens.push_back(kron(eps1, m));
    std::vector<int> grading;
    for (int a : r1.grading)
        for (int b : r2.grading) grading.push_back(a * b);
    return extend_by_flca(g.alg, std::move(gens), std::move(grading));
}

SplitRep even_sparsity_check(const GradedRep& rep) {
    SplitRep s;
    for (size_t r = 0; r < rep.dim; ++r) (rep.grading[r] > 0 ? s.plus_rows : s.minus_rows).push_back(r);
    for (Mask m : rep.source->even_monomials()) {
        const QuatMat& im = rep.monomials[m];
        for (size_t r = 0; r < rep.dim; ++r)
            for (size_t c = 0; c < rep.dim; ++c)
                if (rep.grading[r] != rep.grading[c] && !is_zero(im(r, c)))
                    throw PatternViolation("even monomial " + rep.source->mask_name(m) + " has entry (" +
                                           std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                           ") outside the block pattern");
    }
    return s;
}

std::pair<QuatMat, QuatMat> split_eval(const GradedRep& rep, const SplitRep& s, const CElemQ& x) {
    if (!x.is_even()) throw OddElement("split_eval needs an even element");
    QuatMat m = rep.eval(x);
    return {m.select(s.plus_rows, s.plus_rows), m.select(s.minus_rows, s.minus_rows)};
}

Rational real_trace(const QuatMat& m) {
    Rational t = 0;
    for (size_t i = 0; i < std::min(m.rows, m.cols); ++i) t += m(i, i).w;
    return t;
}

TSetup build_T_setup() {
    TSetup t;
    t.clU = make_algebra(lattice_U(1), {"f1", "f2"});
    t.clU2 = make_algebra(lattice_U(2), {"f3", "f4"});
    t.clD4 = make_algebra(lattice_D4minus(), {"h1", "h2", "h3", "h4"});
    t.repU = rep_U(t.clU, 1);
    t.repU2 = rep_U(t.clU2, 2);
    t.repUU2 = graded_kronecker(t.repU, t.repU2);
    t.clUU2 = t.repUU2.source;
    t.repD4 = rep_D4minus(t.clD4);
    t.repT = graded_kronecker(t.repUU2, t.repD4);
    t.clT = t.repT.source;
    t.split = even_sparsity_check(t.repT);
    t.shift = t.clUU2->n();
    return t;
}

}  // namespace ks

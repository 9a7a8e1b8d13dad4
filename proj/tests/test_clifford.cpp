#include <doctest.h>

#include "ks/rep.hpp"
#include "oracles.hpp"

using namespace ks;

namespace {
// Full product table against the word reducer.
bool table_matches_reducer(const CliffordAlg& a) {
    oracle::WordReducer red(a.bilinear());
    for (Mask s = 0; s < a.dim(); ++s)
        for (Mask r = 0; r < a.dim(); ++r) {
            auto w = oracle::WordReducer::word_of(s, a.n());
            auto w2 = oracle::WordReducer::word_of(r, a.n());
            w.insert(w.end(), w2.begin(), w2.end());
            auto expect = red.reduce(w);
            std::map<Mask, Rational> got;
            for (const auto& [u, c] : a.mono(s, r)) got[u] += c;
            if (got.size() != expect.size()) return false;
            for (const auto& [word, c] : expect) {
                Mask m = 0;
                for (size_t i : word) m |= Mask(1) << i;
                if (got[m] != c) return false;
            }
        }
    return true;
}

CElemQ rand_elem(const AlgPtr& a, size_t terms) {
    CElemQ e(a);
    for (size_t t = 0; t < terms; ++t)
        e.c[Mask(oracle::rand_int(0, long(a->dim()) - 1))] += oracle::rand_int(-4, 4);
    e.prune();
    return e;
}
}  // namespace

TEST_SUITE("clifford-core") {
    TEST_CASE("product table agrees with the tensor-algebra word reducer") {
        for (auto l : {lattice_U(1), lattice_U(2), lattice_D4minus(), orthogonal_sum({lattice_U(1), lattice_U(2)})}) {
            CAPTURE(l.name);
            auto a = make_algebra(l);
            CHECK(table_matches_reducer(*a));
        }
    }

    TEST_CASE("dimension law") {
        for (auto l : {lattice_U(1), lattice_U(2), lattice_D4minus(), orthogonal_sum({lattice_U(1), lattice_U(2)}),
                       orthogonal_sum({lattice_U(1), lattice_U(2), lattice_D4minus()})}) {
            auto a = make_algebra(l);
            CHECK(a->dim() == Mask(1) << l.rank());
            CHECK(a->even_monomials().size() == size_t(a->dim() / 2));
            CHECK(a->odd_monomials().size() == size_t(a->dim() / 2));
        }
    }

    TEST_CASE("generator relations and random associativity in Cl(T)") {
        auto t = make_algebra(orthogonal_sum({lattice_U(1), lattice_U(2), lattice_D4minus()}));
        const QMat& b = t->bilinear();
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 8; ++j) {
                auto ei = CElemQ::gen(t, i), ej = CElemQ::gen(t, j);
                CHECK(ei * ej + ej * ei == CElemQ::scalar(t, 2 * b(i, j)));
            }
        for (int k = 0; k < 30; ++k) {
            auto x = rand_elem(t, 6), y = rand_elem(t, 6), z = rand_elem(t, 6);
            CHECK((x * y) * z == x * (y * z));
        }
    }

    TEST_CASE("transpose is an anti-automorphism and the canonical automorphism is multiplicative") {
        auto t = make_algebra(orthogonal_sum({lattice_U(1), lattice_U(2), lattice_D4minus()}));
        for (int k = 0; k < 30; ++k) {
            auto x = rand_elem(t, 6), y = rand_elem(t, 6);
            CHECK(transpose(x * y) == transpose(y) * transpose(x));
            CHECK(transpose(transpose(x)) == x);
            CHECK(canonical_automorphism(x * y) == canonical_automorphism(x) * canonical_automorphism(y));
        }
    }

    TEST_CASE("gluing embeds both factors as graded-commuting subalgebras") {
        auto u = make_algebra(lattice_U(1)), u2 = make_algebra(lattice_U(2));
        Glued g = glue(*u, *u2);
        CHECK(g.alg->n() == 4);
        for (int k = 0; k < 20; ++k) {
            auto x = rand_elem(u, 3), y = rand_elem(u, 3);
            CHECK(embed(x * y, g.alg, 0) == embed(x, g.alg, 0) * embed(y, g.alg, 0));
            auto p = rand_elem(u2, 3), q = rand_elem(u2, 3);
            CHECK(embed(p * q, g.alg, g.shift) == embed(p, g.alg, g.shift) * embed(q, g.alg, g.shift));
        }
        // odd elements of different factors anticommute
        auto a = embed(CElemQ::gen(u, 0), g.alg, 0), b = embed(CElemQ::gen(u2, 1), g.alg, g.shift);
        CHECK(a * b == -(b * a));
    }

    TEST_CASE("element parser") {
        auto t = build_T_setup().clT;
        auto x = parse_element(t, "f1*f2 + 3*h1*h2");
        CHECK(to_rational_elem(x) == CElemQ::gen(t, 0) * CElemQ::gen(t, 1) +
                                         CElemQ::scalar(t, 3) * CElemQ::gen(t, 4) * CElemQ::gen(t, 5));
        CHECK(parse_element(t, "e{1,2}") == parse_element(t, "f1*f2"));
        CHECK(parse_element(t, "sqrt2*f1").coeff(1) == QuadExt::sqrt2());
        CHECK_THROWS(parse_element(t, "g7"));
    }
}

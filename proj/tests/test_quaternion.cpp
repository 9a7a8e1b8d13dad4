#include <doctest.h>

#include "ks/quaternion.hpp"
#include "oracles.hpp"

using namespace ks;

namespace {
QuatQ rand_quat(long r = 9) {
    return {rat(oracle::rand_int(-r, r), oracle::rand_int(1, 3)), rat(oracle::rand_int(-r, r), oracle::rand_int(1, 3)),
            rat(oracle::rand_int(-r, r), oracle::rand_int(1, 3)), rat(oracle::rand_int(-r, r), oracle::rand_int(1, 3))};
}
GaussQuad det2(const Mat<GaussQuad>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
}  // namespace

TEST_SUITE("quaternion") {
    TEST_CASE("Hamilton relations") {
        QuatQ i = QuatQ::i(), j = QuatQ::j(), k = QuatQ::k();
        CHECK(i * i == QuatQ(-1));
        CHECK(j * j == QuatQ(-1));
        CHECK(k * k == QuatQ(-1));
        CHECK(i * j * k == QuatQ(-1));
        CHECK(i * j == k);
        CHECK(j * i == -k);
    }

    TEST_CASE("norm is multiplicative and conjugation reverses products") {
        for (int t = 0; t < 200; ++t) {
            QuatQ p = rand_quat(), q = rand_quat();
            CHECK((p * q).norm() == p.norm() * q.norm());
            CHECK((p * q).conj() == q.conj() * p.conj());
            if (!is_zero(q)) CHECK((p / q) * q == p);
        }
    }

    TEST_CASE("chi is an injective algebra map with det = norm and chi(conj q) = chi(q)^*") {
        for (int t = 0; t < 200; ++t) {
            QuatQ p = rand_quat(), q = rand_quat();
            CHECK(chi(p * q) == chi(p) * chi(q));
            CHECK(chi(p + q) == chi(p) + chi(q));
            CHECK(det2(chi(p)) == GaussQuad(Rational(p.norm())));
            CHECK(chi(p.conj()) == adjoint(chi(p)));
        }
        CHECK(chi(QuatQ(1)) == Mat<GaussQuad>::identity(2));
    }

    TEST_CASE("chi_matrix is multiplicative on quaternion matrices") {
        for (int t = 0; t < 20; ++t) {
            Mat<QuatR> a(3, 3), b(3, 3);
            for (auto& x : a.d) x = lift(rand_quat(3));
            for (auto& x : b.d) x = lift(rand_quat(3));
            CHECK(chi_matrix(a * b) == chi_matrix(a) * chi_matrix(b));
        }
    }

    TEST_CASE("Hurwitz order") {
        auto basis = hurwitz_basis();
        // closed under multiplication; products of basis elements stay integral
        for (const auto& p : basis)
            for (const auto& q : basis) CHECK(in_hurwitz(p * q));
        CHECK_FALSE(in_hurwitz(QuatQ(rat(1, 2))));
        CHECK(in_hurwitz(hurwitz_h()));
        // reduced norm Gram on {h,i,j,k}
        Mat<Rational> g = hurwitz_gram();
        for (size_t a = 0; a < 4; ++a)
            for (size_t b = 0; b < 4; ++b) CHECK(g(a, b) == (basis[a] * basis[b].conj()).w);
        CHECK(g(0, 0) == 1);
        CHECK(determinant(g) == rat(1, 4));
        // 24 units, i.e. 12 minimal pairs of norm 1
        auto sv = shortest_vectors(g);
        CHECK(sv.min_norm == 1);
        CHECK(sv.vectors.size() == 12);
    }

    TEST_CASE("HurwitzElem coordinates round trip") {
        for (int t = 0; t < 100; ++t) {
            HurwitzElem a{{oracle::rand_int(-5, 5), oracle::rand_int(-5, 5), oracle::rand_int(-5, 5), oracle::rand_int(-5, 5)}};
            CHECK(HurwitzElem::from_quat(a.value()) == a);
        }
        CHECK_THROWS(HurwitzElem::from_quat(QuatQ(rat(1, 2))));
    }
}

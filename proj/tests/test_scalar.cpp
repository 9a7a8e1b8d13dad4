#include <doctest.h>

#include <cmath>

#include "ks/scalar.hpp"
#include "oracles.hpp"

using namespace ks;

namespace {
QuadExt rand_quad() {
    return {rat(oracle::rand_int(-50, 50), oracle::rand_int(1, 9)), rat(oracle::rand_int(-50, 50), oracle::rand_int(1, 9))};
}
}  // namespace

TEST_SUITE("scalar-tower") {
    TEST_CASE("QuadExt field axioms on random elements") {
        for (int t = 0; t < 200; ++t) {
            QuadExt x = rand_quad(), y = rand_quad(), z = rand_quad();
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!is_zero(x)) CHECK(x * x.inv() == QuadExt(1));
            // the Galois conjugation is a ring automorphism and the norm is multiplicative
            CHECK((x * y).galois() == x.galois() * y.galois());
            CHECK((x * y).norm() == x.norm() * y.norm());
        }
    }

    TEST_CASE("sign agrees with floating point away from zero") {
        for (int t = 0; t < 500; ++t) {
            QuadExt x = rand_quad();
            double d = to_double(x);
            if (std::abs(d) < 1e-9) continue;
            CHECK(qe_sign(x) == (d > 0 ? 1 : -1));
        }
        CHECK(qe_sign(QuadExt(rat(3), rat(-2))) == 1);   // 3 - 2 sqrt2 > 0
        CHECK(qe_sign(QuadExt(rat(-3), rat(2))) == -1);
        CHECK(qe_sign(QuadExt(rat(99), rat(-70))) == 1);  // 99 > 70 sqrt2 = 98.99..
    }

    TEST_CASE("square roots") {
        for (int t = 0; t < 100; ++t) {
            QuadExt x = qe_abs(rand_quad());
            QuadExt y = qe_sqrt(x * x);
            CHECK(y == x);
        }
        CHECK(qe_sqrt(QuadExt(512)) == QuadExt(0, 16));
        CHECK(qe_sqrt(QuadExt(256)) == QuadExt(16));
        CHECK_THROWS_AS(qe_sqrt(QuadExt(3)), NotASquare);
        CHECK_THROWS_AS(qe_sqrt(QuadExt(-4)), NotASquare);
    }

    TEST_CASE("GaussQuad division and conjugation") {
        for (int t = 0; t < 100; ++t) {
            GaussQuad a(rand_quad(), rand_quad()), b(rand_quad(), rand_quad());
            if (is_zero(b)) continue;
            CHECK((a / b) * b == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a * a.conj()).im == QuadExt(0));
        }
        CHECK(GaussQuad::I() * GaussQuad::I() == GaussQuad(-1));
    }

    TEST_CASE("parser") {
        CHECK(parse_quad("(8193 - 128*sqrt2)/8191") == QuadExt(rat(8193, 8191), rat(-128, 8191)));
        CHECK(parse_gauss("1 + 2*I") == GaussQuad(QuadExt(1), QuadExt(2)));
        CHECK(parse_rational("-3/4") == rat(-3, 4));
        CHECK_THROWS_AS(parse_quad("1 + "), ParseError);
        CHECK_THROWS_AS(parse_quad("I"), ParseError);
    }

    TEST_CASE("text round trip") {
        for (int t = 0; t < 100; ++t) {
            QuadExt x = rand_quad();
            CHECK(parse_quad(to_string(x)) == x);
        }
    }
}

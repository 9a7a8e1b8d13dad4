#include <doctest.h>

#include "fixture.hpp"
#include "oracles.hpp"

using namespace ks;

TEST_SUITE("attributes") {
    TEST_CASE("reference modules have 6 and 12 minimal pairs, checked by box enumeration") {
        for (const auto& [m, pairs] : {std::pair{module_I6(), size_t(6)}, std::pair{module_I12(), size_t(12)}}) {
            CHECK(minimal_vectors(m).vectors.size() == pairs);
            CHECK(oracle::box_minimum(m.gram).pairs == pairs);
        }
        CHECK(module_I12().gram == hurwitz_gram());
        // I6 is an index 2 sublattice of the Hurwitz order
        CHECK(determinant(module_I6().gram) == 4 * determinant(module_I12().gram));
        for (const auto& q : module_I6().basis) CHECK(module_contains(module_I12(), q));
    }

    TEST_CASE("module isomorphism is witnessed by right multiplication") {
        QuatQ h(rat(1), rat(2), rat(-1), rat(3));
        QuatModule m = right_multiply(module_I6(), h);
        auto w = module_isomorphic(m, module_I6());
        REQUIRE(w.has_value());
        CHECK(module_equal(right_multiply(m, *w), module_I6()));
        CHECK_FALSE(module_isomorphic(module_I6(), module_I12()).has_value());
    }

    TEST_CASE("extracted modules: minimal pair counts and isomorphism classes") {
        const auto& a = fixture::get().attr;
        std::array<size_t, 4> pairs{};
        for (size_t i = 0; i < 4; ++i) {
            pairs[i] = a.minima[i].vectors.size();
            CHECK(oracle::box_minimum(a.ext.mods[i].gram).pairs == pairs[i]);
        }
        CHECK(pairs == std::array<size_t, 4>{6, 6, 12, 12});
        CHECK(a.match == std::array<std::string, 4>{"I6", "I6", "I12", "I12"});
        for (size_t i = 0; i < 4; ++i) {
            QuatModule target = a.match[i] == "I6" ? module_I6() : module_I12();
            CHECK(module_equal(right_multiply(a.ext.mods[i], a.multipliers[i]), target));
        }
    }

    TEST_CASE("modules are stable under the avatars r_j") {
        const auto& a = fixture::get().attr;
        std::vector<QuatQ> ring(a.ext.r.begin(), a.ext.r.end());
        CHECK(a.ext.r[0] == QuatQ(1));
        for (const auto& m : a.ext.mods) CHECK(left_closed(m, ring));
    }

    TEST_CASE("T reproduces the hermitian matrix exactly") {
        const auto& a = fixture::get().attr;
        CHECK(a.T_verified);
        CHECK(is_skew_hermitian(a.T));
        CHECK(a.T == fixture::reference_T());
        CHECK(a.T_canonical == canonical_T(fixture::reference_T()));
        CHECK(verify_T(a.ext.mods, a.multipliers, a.ME, a.T));
        // a perturbed T no longer solves the system
        QuatMatT bad = a.T;
        bad(0, 1) += QuatQ(1);
        CHECK_FALSE(verify_T(a.ext.mods, a.multipliers, a.ME, bad));
    }

    TEST_CASE("M_E is antisymmetric and the trace domains differ by 16 and 32") {
        const auto& p = fixture::get();
        CElemQ alpha = alpha_default(p.ks.setup);
        QMat me = polarization_form(p.ks, p.lam, alpha, TraceDomain::MatrixRep);
        CHECK(me.transpose() == -me);
        CHECK(rank(me) == 16);
        CHECK(polarization_form(p.ks, p.lam, alpha, TraceDomain::ClEven) == scale(Rational(16), me));
        CHECK(polarization_form(p.ks, p.lam, alpha, TraceDomain::ClFull) == scale(Rational(32), me));
    }

    TEST_CASE("trace domain names") {
        CHECK(parse_trace_domain("cl_even") == TraceDomain::ClEven);
        CHECK(to_string(parse_trace_domain("matrix_rep")) == "matrix_rep");
        CHECK_THROWS(parse_trace_domain("bogus"));
    }
}

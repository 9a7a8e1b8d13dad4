// The T pipeline is built once per test process and shared.
#pragma once

#include "ks/period.hpp"

namespace fixture {

struct Pipeline {
    ks::KSData ks = ks::build_ks();
    ks::LambdaRe lam = ks::build_lambda(ks, 0);
    ks::RepPhiRe phi = ks::build_phi_re(ks, lam);
    ks::AttributeReport attr = ks::compute_attributes(ks, lam, phi, ks::alpha_default(ks.setup));
    ks::PeriodContext ctx() const { return {ks, lam, phi, attr}; }
};

inline const Pipeline& get() {
    static const Pipeline p;
    return p;
}

inline ks::QuatMatT reference_T() {
    ks::QuatMatT t(4, 4);
    t(0, 1) = 256, t(1, 0) = -256, t(2, 3) = -512, t(3, 2) = 512;
    return t;
}

}  // namespace fixture

// Pseudo-idempotents of Cl(T), the eight lattices Lambda_i and the endomorphism matrices N_j.
#pragma once

#include <array>

#include "ks/rep.hpp"

namespace ks {

struct NoIntegralSolution : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotIntegral : std::domain_error {
    using std::domain_error::domain_error;
};

// elem^2 = scale * elem
struct PseudoIdempotent {
    CElemQ elem;
    Integer scale;
};

bool is_pseudo_idempotent(const PseudoIdempotent& p);

std::array<PseudoIdempotent, 4> build_x_idempotents(const AlgPtr& clUU2);

// Solves phi(H) = diag(-2, 2) on the even part; returns H.
CElemQ solve_H(const GradedRep& repD4);
std::array<PseudoIdempotent, 2> build_y_idempotents(const GradedRep& repD4);

// (x index, y index) for each epsilon, 0-based.
inline constexpr std::array<std::pair<int, int>, 8> kEpsilonPairs{
    {{0, 0}, {1, 1}, {2, 1}, {3, 0}, {0, 1}, {1, 0}, {2, 0}, {3, 1}}};

std::array<PseudoIdempotent, 8> build_epsilons(const TSetup& t, const std::array<PseudoIdempotent, 4>& x,
                                              const std::array<PseudoIdempotent, 2>& y);

struct KernelGens {
    std::vector<CElemQ> even, odd;
    std::vector<CElemQ> all() const;
    size_t rank() const { return even.size() + odd.size(); }
};

// Saturated integer kernel of right multiplication by (scale - elem), computed per parity.
KernelGens kernel_generators(const PseudoIdempotent& p);

struct LambdaRe {
    size_t index = 0;             // 0-based epsilon index
    std::vector<CElemQ> basis;    // 16 products L_s K_w
    std::vector<std::pair<size_t, size_t>> labels;  // (s, w), 0-based into the kernel lists
    Coordinatizer<Rational> coord;  // columns are the basis coordinates in Cl(T)
    bool saturated = false;
};

struct KSData {
    TSetup setup;
    std::array<PseudoIdempotent, 4> x;
    CElemQ H;
    std::array<PseudoIdempotent, 2> y;
    std::array<PseudoIdempotent, 8> eps;
    std::array<KernelGens, 4> xker;
    std::array<KernelGens, 2> yker;
};

KSData build_ks();

LambdaRe build_lambda(const KSData& ks, size_t i);

// Coordinates of v on the basis of lam; nullopt when v is outside the rational span.
std::optional<std::vector<Rational>> lambda_coords(const LambdaRe& lam, const CElemQ& v);

struct RepPhiRe {
    std::array<CElemQ, 4> htilde;
    std::array<IMat, 4> N;  // N[:, k] = coordinates of b_k * htilde_j
};

std::array<CElemQ, 4> build_htilde(const TSetup& t);
RepPhiRe build_phi_re(const KSData& ks, const LambdaRe& lam);

bool is_block_diagonal(const IMat& m, size_t block);
// The span of the N_j is a primitive rank-4 sublattice of M16(Z).
bool spans_primitive_rank4(const RepPhiRe& phi);
// Matrix of left multiplication by a on the rational span of lam.
QMat left_action(const LambdaRe& lam, const CElemQ& a);
// N_j commutes with left multiplication by every product of two generators of T.
bool commutes_with_left_action(const KSData& ks, const LambdaRe& lam, const RepPhiRe& phi);

}  // namespace ks

// Concrete representations Cl(U(n)) -> M2(Q), Cl(D4(-1)) -> M2(o), their graded gluing,
// and the split of the even part of the glued M8 representation into two M4 blocks.
#pragma once

#include <utility>
#include <vector>

#include "ks/clifford.hpp"

namespace ks {

struct PatternViolation : std::domain_error {
    using std::domain_error::domain_error;
};
struct OddElement : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// f1 -> [[0,1],[0,0]], f2 -> [[0,0],[2n,0]]
GradedRep rep_U(AlgPtr clU, long n);
// h_w -> [[0, z_w], [-2 conj z_w, 0]] with z = (h, i, j, k)
GradedRep rep_D4minus(AlgPtr clD4);

// Images v -> kron(phi1(v), I) and v' -> kron(eps1, phi2(v')), where eps1 is the row grading of r1.
// The glued grading is the tensor product of the two gradings.
GradedRep graded_kronecker(const GradedRep& r1, const GradedRep& r2);

struct SplitRep {
    std::vector<size_t> plus_rows, minus_rows;  // 0-based
};

// Checks that every even monomial has support inside the two grading blocks.
SplitRep even_sparsity_check(const GradedRep& rep);

std::pair<QuatMat, QuatMat> split_eval(const GradedRep& rep, const SplitRep& s, const CElemQ& x);

// Real part of the trace of phi(x).
Rational real_trace(const QuatMat& m);

// The algebras and representation used for T = U + U(2) + D4(-1).
struct TSetup {
    AlgPtr clU, clU2, clUU2, clD4, clT;
    GradedRep repU, repU2, repUU2, repD4, repT;
    SplitRep split;
    size_t shift = 4;  // index of h1 among the generators of T
};

TSetup build_T_setup();

}  // namespace ks

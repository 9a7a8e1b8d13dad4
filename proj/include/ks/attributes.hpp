// PEL attributes of Lambda_1: quaternion modules, the polarization matrix M_E and the hermitian data T.
#pragma once

#include <optional>

#include "ks/ks.hpp"

namespace ks {

struct InconsistentSolve : std::domain_error {
    using std::domain_error::domain_error;
};

struct QuatModule {
    std::string name;
    std::array<QuatQ, 4> basis;
    QMat gram;  // Re(x conj y)
};

QuatModule make_module(std::string name, const std::array<QuatQ, 4>& basis);
QuatModule module_I6();   // <h+i, h+j, i+j, k>
QuatModule module_I12();  // the Hurwitz order

std::optional<std::vector<Rational>> module_coords(const QuatModule& m, const QuatQ& q);
bool module_contains(const QuatModule& m, const QuatQ& q);
bool module_equal(const QuatModule& a, const QuatModule& b);
QuatModule right_multiply(const QuatModule& m, const QuatQ& h);
// Closed under left multiplication by every element of `ring`.
bool left_closed(const QuatModule& m, const std::vector<QuatQ>& ring);

struct MinimalVectors {
    Rational norm;
    std::vector<QuatQ> vectors;  // one per +- pair, in enumeration order
};
MinimalVectors minimal_vectors(const QuatModule& m);

// First h = u^-1 v (u, v minimal) with M h = N.
std::optional<QuatQ> module_isomorphic(const QuatModule& m, const QuatModule& n);

struct ExtractedModules {
    std::array<std::vector<Integer>, 4> divisors;
    std::array<Integer, 4> d;
    std::array<QuatQ, 4> r;  // quaternion avatars of htilde_j
    std::array<QuatModule, 4> mods;
};

// diag_pos: 0-based row of the diagonal entry of phi(eps_i) in the 8x8 representation.
size_t epsilon_diag_position(const TSetup& t, size_t eps_index);
ExtractedModules extract_modules(const KSData& ks, const LambdaRe& lam, const RepPhiRe& phi);

enum class TraceDomain { MatrixRep, ClEven, ClFull };
TraceDomain parse_trace_domain(const std::string& s);
std::string to_string(TraceDomain d);

CElemQ alpha_default(const TSetup& t);      // (f1+f2)(f3+f4)
CElemQ alpha_alternative(const TSetup& t);  // (f1+f2)(f1-f2)

// M_E[h,l] = tr(alpha b_h^t b_l)
QMat polarization_form(const KSData& ks, const LambdaRe& lam, const CElemQ& alpha,
                       TraceDomain dom = TraceDomain::MatrixRep);

using QuatMatT = Mat<QuatQ>;

// Solves 2 Re(s_h T_ij conj(s_l)) = M_E[h,l] where s_h = mods[h/4].basis[h%4] * mult[h/4].
QuatMatT solve_T(const std::array<QuatModule, 4>& mods, const std::array<QuatQ, 4>& mult, const QMat& ME);
bool verify_T(const std::array<QuatModule, 4>& mods, const std::array<QuatQ, 4>& mult, const QMat& ME,
              const QuatMatT& T);
bool is_skew_hermitian(const QuatMatT& T);
// Least form under the swaps of the first two and last two indices.
QuatMatT canonical_T(const QuatMatT& T);

struct AttributeReport {
    ExtractedModules ext;
    std::array<MinimalVectors, 4> minima;
    std::array<std::string, 4> match;  // "I6", "I12" or ""
    std::array<QuatQ, 4> multipliers;
    CElemQ alpha;
    TraceDomain domain = TraceDomain::MatrixRep;
    QMat ME;
    QuatMatT T, T_canonical;
    bool T_verified = false;
};

AttributeReport compute_attributes(const KSData& ks, const LambdaRe& lam, const RepPhiRe& phi,
                                   const CElemQ& alpha, TraceDomain dom = TraceDomain::MatrixRep);

}  // namespace ks

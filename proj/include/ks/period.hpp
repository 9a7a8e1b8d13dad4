// Complex structure J = e1 e2 on Lambda_1, standardization of the quaternion action and the period matrix Z.
#pragma once

#include "ks/attributes.hpp"

namespace ks {

struct NotOrthonormal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};
struct NoInvertibleKernelElement : std::domain_error {
    using std::domain_error::domain_error;
};
struct SingularV : std::domain_error {
    using std::domain_error::domain_error;
};
struct NormalizationImpossible : std::domain_error {
    using std::domain_error::domain_error;
};

using QEMat = Mat<QuadExt>;
using GQMat = Mat<GaussQuad>;
using GQVec = std::vector<GaussQuad>;

// sigma = e1 + i e2, coordinates on the generators of T.
struct PeriodPoint {
    std::vector<QuadExt> e1, e2;
};

QuadExt bilinear(const QMat& gram, const std::vector<QuadExt>& u, const std::vector<QuadExt>& v);
void validate(const PeriodPoint& p, const QMat& gram);
PeriodPoint conjugate(const PeriodPoint& p);  // e2 -> -e2
PeriodPoint reference_omega();                    // (f1+f2)/sqrt2 - i (f3+f4)/2

CElemR j_element(const TSetup& t, const PeriodPoint& p);
// Left multiplication by x on the span of lam, over Q(sqrt2).
QEMat left_action_quad(const LambdaRe& lam, const CElemR& x);

// x (x^-)^t = 1 and x^- v x^-1 in V for every generator v.
bool spin_check(const CElemR& x);

bool is_positive_definite(const QEMat& sym);
GQMat to_gauss(const QEMat& m);
GQMat eigenbasis(const QEMat& J);

struct Standardized {
    std::array<GQMat, 4> M;  // N_i Eig = Eig M_i
    GQMat Q;                 // Q M_i Q^-1 = chi(r_i) (x) 1_4
    size_t kernel_dim = 0;
    bool verified = false;
};

// `choice` selects the kernel combination; 0 is the default.
Standardized standardize_rep(const GQMat& eig, const RepPhiRe& phi, const std::array<QuatQ, 4>& r, size_t choice = 0);

enum class Frame { Rational, Sqrt };
Frame parse_frame(const std::string& s);
std::string to_string(Frame f);

// g with g T g^* = -i 1_4, for T in 2x2 block form [[0,t],[-t,0]].
Mat<QuatR> normalization_frame(const QuatMatT& T, Frame f);

GaussQuad cayley(const GaussQuad& x);  // i(1+x)/(1-x)

struct PeriodResult {
    int j_sign = 1;  // sign chosen so that v -> E(v, Jv) is positive definite
    bool plus_positive = false, minus_positive = false;
    bool j_squared = false, j_commutes = false, j_isometry = false, j_spin = false;
    size_t eig_dim = 0, q_kernel_dim = 0;
    bool q_verified = false, frame_verified = false, fallback_used = false;
    std::array<GQVec, 4> x;  // Q mu(e_{4i})
    GQMat Z;
    bool antisymmetric = false, positive = false, sparse = false;
    std::optional<GaussQuad> a, b;
};

struct PeriodContext {
    const KSData& ks;
    const LambdaRe& lam;
    const RepPhiRe& phi;
    const AttributeReport& attr;
};

// With auto_sign the sign of J is chosen by positivity; otherwise J = e1 e2 is used as given.
PeriodResult period_matrix(const PeriodContext& ctx, const PeriodPoint& p, Frame frame = Frame::Rational,
                           size_t q_choice = 0, bool auto_sign = true);

struct ScanEntry {
    PeriodPoint point;
    PeriodResult result;
    bool a_in_disc = false, b_in_disc = false;
    std::optional<GaussQuad> fa, fb;
    bool pass() const;
};

std::vector<PeriodPoint> default_scan_points();
std::vector<ScanEntry> rank18_scan(const PeriodContext& ctx, const std::vector<PeriodPoint>& pts,
                                   Frame frame = Frame::Rational);
bool in_unit_disc(const GaussQuad& z);

struct RankCheck {
    std::array<size_t, 4> even, odd;  // Z-ranks of Cl+(T') x_i and Cl-(T') x_i
    size_t even_total = 0;           // rank of the stacked even pieces
};
RankCheck rank_check_Tprime(const KSData& ks);

struct ReferenceTarget {
    QuadExt a, b;
};
ReferenceTarget reference_target();
// Matches (a, b) against the target up to a simultaneous sign.
std::pair<bool, bool> match_target(const GaussQuad& a, const GaussQuad& b, const ReferenceTarget& t);

}  // namespace ks

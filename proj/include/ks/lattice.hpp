// Integral lattices: Smith form, saturated kernels, shortest vectors, named lattices.
#pragma once

#include <string>
#include <vector>

#include "ks/matrix.hpp"

namespace ks {

struct NotPositiveDefinite : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnknownName : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using IMat = Mat<Integer>;
using QMat = Mat<Rational>;

struct IntLattice {
    std::string name;
    QMat gram;
    size_t rank() const { return gram.rows; }
};

// Row-convention sublattice of Z^ambient.
struct SubLattice {
    size_t ambient_rank = 0;
    IMat basis;  // one generator per row
    size_t rank() const { return basis.rows; }
};

struct SmithForm {
    std::vector<Integer> divisors;  // nonzero elementary divisors, d1 | d2 | ...
    IMat U, V, D;                   // U * A * V = D
};

SmithForm smith_normal_form(const IMat& a);
std::vector<Integer> elementary_divisors(const IMat& a);

// Row Hermite normal form of the row span (zero rows dropped).
IMat hermite_rows(IMat a);

// {v : v * A = 0}, saturated, in Hermite form.
SubLattice integer_kernel(const IMat& a);
SubLattice integer_kernel(const QMat& a);

// Saturation of the row span of B inside Z^n.
SubLattice saturate(const IMat& b);
bool is_saturated(const IMat& b);

// Integer matrix with the same rows up to a positive scalar per row (clears denominators).
IMat clear_denominators_rows(const QMat& m);
// Entry-wise conversion; throws if some entry is not integral.
IMat to_integer(const QMat& m);
QMat to_rational(const IMat& m);

struct ShortestVectors {
    Rational min_norm;
    std::vector<std::vector<Integer>> vectors;  // coordinates on the given basis, one per +- pair
};

// Exact Fincke-Pohst on a positive definite rational Gram.
ShortestVectors shortest_vectors(const QMat& gram);
// Sublattice generated by `basis` rows under an ambient form.
ShortestVectors shortest_vectors(const SubLattice& l, const QMat& form);
// All nonzero x with x^t G x <= bound, one per +- pair.
std::vector<std::vector<Integer>> enumerate_short(const QMat& gram, const Rational& bound);

QMat restrict_form(const IMat& basis, const QMat& form);

IntLattice lattice_U(long n = 1);
IntLattice lattice_D4minus();
IntLattice orthogonal_sum(const std::vector<IntLattice>& parts);
// "U", "U(n)", "U2", "D4minus", "D4(-1)"
IntLattice named_lattice(const std::string& name);

}  // namespace ks

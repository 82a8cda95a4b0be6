#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "tcds/error.hpp"
#include "tcds/rng.hpp"

namespace tcds {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// Shape of the coefficient algebra A = M_{n_1}(C) ⊕ ... ⊕ M_{n_m}(C).
struct AlgebraShape {
  std::vector<int> blocks;

  int dim_rep() const;  // Σ n_i, dimension of the standard representation space
  bool operator==(const AlgebraShape&) const = default;
};

// Element of A: one dense complex matrix per block.
struct AlgebraElement {
  AlgebraShape shape;
  std::vector<Mat> mats;
};

AlgebraElement zero_element(const AlgebraShape& shape);
AlgebraElement unit_element(const AlgebraShape& shape);

// Matrix units of every block, in block-major then row-major order.
// This is a linear basis of A, so linear identities checked on it hold on A.
std::vector<AlgebraElement> basis_elements(const AlgebraShape& shape);

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const cplx& lambda, const AlgebraElement& a);
AlgebraElement& operator+=(AlgebraElement& a, const AlgebraElement& b);
AlgebraElement adjoint(const AlgebraElement& a);

// Largest singular value over all blocks; this is ‖a‖_A.
double operator_norm(const AlgebraElement& a);

// max|a*a - 1| and |aa* - 1| in operator norm, both within tol
bool is_unitary(const AlgebraElement& a, double tol);

bool is_zero(const AlgebraElement& a);          // exact
bool all_finite(const AlgebraElement& a);
double elem_max_abs(const AlgebraElement& a);   // max entrywise magnitude
double elem_distance(const AlgebraElement& a, const AlgebraElement& b);

// *-automorphism of A in structural form: block permutation plus per-block
// unitary conjugation, acting as α(a)_i = u_i · a_{perm(i)} · u_i*. Every
// *-automorphism of a finite direct sum of matrix algebras is of this form.
struct StarAutomorphism {
  AlgebraShape shape;
  std::vector<int> perm;
  std::vector<Mat> units;
};

StarAutomorphism identity_automorphism(const AlgebraShape& shape);
StarAutomorphism inner_automorphism(const AlgebraElement& u);  // Ad(u)

AlgebraElement apply(const StarAutomorphism& phi, const AlgebraElement& a);

// phi ∘ psi: apply(compose(phi, psi), a) == apply(phi, apply(psi, a))
StarAutomorphism compose(const StarAutomorphism& phi, const StarAutomorphism& psi);
StarAutomorphism inverse(const StarAutomorphism& phi);

// Structural sanity: perm is a dimension-preserving permutation, unit sizes
// match, units unitary within tol. Throws shape_mismatch / not_unitary.
void check_automorphism(const StarAutomorphism& phi, double tol = 1e-10);

// Largest singular value. JacobiSVD for small matrices, BDCSVD above that.
double largest_singular_value(const Mat& m);
double mat_max_abs(const Mat& m);

// Random draws (deterministic given the Rng state).
Mat haar_unitary(int n, Rng& rng);
AlgebraElement random_element(const AlgebraShape& shape, Rng& rng);
AlgebraElement random_unitary_element(const AlgebraShape& shape, Rng& rng);

}  // namespace tcds

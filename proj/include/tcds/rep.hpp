#pragma once

#include <functional>

#include "tcds/conv.hpp"

namespace tcds {

// Block-diagonal embedding of a ∈ A into d×d matrices, d = shape.dim_rep().
// Faithful, isometric *-homomorphism.
Mat standard_rep(const AlgebraElement& a);

// Twisted regular covariant pair on ℓ²(G) ⊗ H_A and its integrated form.
// Basis order is group index major, standard-rep coordinate minor:
//   (π̃(a)ξ)(x) = π(α_{x⁻¹}(a)) ξ(x)
//   (U_r ξ)(x)  = π(ω(x⁻¹, r)) ξ(r⁻¹x)
//   Π(f)        = Σ_x k · π̃(f(x)) U_x
// The constructor checks the covariance contract rather than assuming it:
//   U_r π̃(a) U_r* = π̃(α_r(a)),  U_r U_s = π̃(ω(r,s)) U_{rs},  U_e = 1,
// each U_r unitary, exhaustively over G (and a basis of A), and throws
// invalid_system past tol — that would mean an axiom-checker escape.
class RegularRepresentation {
 public:
  explicit RegularRepresentation(SystemPtr sys, double tol = 1e-10);

  int dim() const { return dim_; }
  const SystemPtr& system() const { return sys_; }

  Mat algebra_op(const AlgebraElement& a) const;  // π̃(a)
  const Mat& unitary(int r) const { return u_[r]; }
  Mat integrated(const ConvElement& f) const;     // Π(f)
  double norm(const ConvElement& f) const;        // ‖Π(f)‖

 private:
  SystemPtr sys_;
  int dim_ = 0;
  std::vector<Mat> u_;
};

// A *-representation as a plain map, so the theorem checks can be run
// against any representation, not just the regular one.
using RepMap = std::function<Mat(const ConvElement&)>;

RepMap regular_rep_map(SystemPtr sys);

double rep_norm(const RegularRepresentation& rep, const ConvElement& f);

}  // namespace tcds

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcds/rep.hpp"

namespace tcds {

struct CheckRecord {
  std::string check;   // which identity/inequality, by its equation label
  std::string sample;
  double lhs = 0.0;
  double rhs = 0.0;
  // |lhs - rhs| for identities, lhs - rhs for inequalities (amount of
  // violation; negative means slack).
  double residual = 0.0;
  bool pass = true;
};

struct TheoremReport {
  std::uint64_t seed = 0;
  int samples = 0;
  double tol = 0.0;
  std::vector<CheckRecord> checks;

  bool pass() const;
  double max_residual() const;
};

// First/Second/Main Norm Identity at one (a, r):
//   ‖π(a•δ_r)‖ = ‖π(α_{r⁻¹}(a) ω(r⁻¹,r) • δ_e)‖ = ‖π(α_{r⁻¹}(a) • δ_e)‖
std::vector<CheckRecord> check_norm_identities(const SystemPtr& sys, const RepMap& rep,
                                               const AlgebraElement& a, int r, double tol);

// ‖π(ρ_r(a))‖ ≤ ‖a‖ (π∘ρ_r is a *-homomorphism between C*-algebras, hence
// contractive) and ‖π(a•δ_r)‖ ≤ k‖a‖ (Main Norm Inequality), on sampled (a, r).
std::vector<CheckRecord> check_main_inequality(const SystemPtr& sys, const RepMap& rep,
                                               int samples, std::uint64_t seed, double tol);

// ‖π(f)‖ ≤ ‖f‖₁ on random f of mixed sparsity, plus the decomposition audit
// f = Σ_r f(r)•δ_r underlying the triangle-inequality step.
TheoremReport check_contractivity(const SystemPtr& sys, const RepMap& rep,
                                  int samples, std::uint64_t seed, double tol);

// Full battery against the integrated regular representation: norm
// identities, both inequalities, ρ_r *-homomorphism relations, contractivity,
// tightness at unital deltas, and scale covariance. Deterministic in
// (system, seed, samples, tol).
TheoremReport verify_system(const SystemPtr& sys, std::uint64_t seed, int samples, double tol);

// ---------------------------------------------------------------------------
// Negative control on (Z, C) with trivial action and multiplier, k = 1:
// the evaluation f ↦ Σ f(n) eⁿ is multiplicative for ⋆ but does not respect
// the involution, and it is unbounded against ‖δ_n‖₁ = 1.

// finitely supported scalar function on Z
using ZFunction = std::map<int, cplx>;

ZFunction z_delta(int n);
ZFunction z_convolve(const ZFunction& f, const ZFunction& g);
ZFunction z_involute(const ZFunction& f);  // f*(n) = conj(f(-n))
double z_l1(const ZFunction& f);

// Σ_n f(n) eⁿ. Throws overflow_error when some |n| > 700 (eⁿ would leave
// double range).
cplx exp_functional(const ZFunction& f);

struct GrowthRow {
  int n;
  double l1;        // ‖δ_n‖₁ = 1
  double phi_abs;   // |φ(δ_n)| = eⁿ
  double ratio;     // phi_abs / l1
  double phi_star;  // φ(δ_n*) = e^{-n}, real
  bool involution_violated;  // φ(δ_n*) ≠ conj(φ(δ_n))
};

// Rows n = 0..max_n; requires 1 ≤ max_n ≤ 700.
std::vector<GrowthRow> counterexample_growth(int max_n);

}  // namespace tcds

#pragma once

#include "tcds/system.hpp"

namespace tcds {

// Element of the twisted convolution *-algebra: a total function G → A.
// Pins its system by identity; arithmetic across distinct systems is an
// error, never a coercion.
struct ConvElement {
  SystemPtr system;
  std::vector<AlgebraElement> values;  // values[x] = f(x)
};

ConvElement zero_conv(const SystemPtr& sys);

// a • δ_r: value a at r, zero elsewhere.
ConvElement delta(const SystemPtr& sys, const AlgebraElement& a, int r);

// (f ⋆ g)(x) = Σ_y k · f(y) · α_y(g(y⁻¹x)) · ω(y, y⁻¹x), summed in group
// index order.
ConvElement convolve(const ConvElement& f, const ConvElement& g);

// f*(x) = ω(x, x⁻¹)* · α_x(f(x⁻¹)*)   (Δ_G ≡ 1: discrete groups are unimodular)
ConvElement involute(const ConvElement& f);

// Σ_x k · ‖f(x)‖_A
double l1_norm(const ConvElement& f);

ConvElement operator+(const ConvElement& f, const ConvElement& g);
ConvElement operator-(const ConvElement& f, const ConvElement& g);
ConvElement operator*(const cplx& lambda, const ConvElement& f);
double conv_distance(const ConvElement& f, const ConvElement& g);  // max entrywise

// Closed forms for products and adjoints of delta elements:
//   conv_delta    = (k · a α_r(b) ω(r,s)) • δ_{rs}
//   star_delta    = ω(r⁻¹,r)* α_{r⁻¹}(a*) • δ_{r⁻¹}
//   conv_delta_e  = (k · a b) • δ_e
//   star_delta_e  = a* • δ_e
// Coded from the closed forms directly, not through convolve/involute, so
// each side can serve as the other's oracle.
struct LemmaForms {
  ConvElement conv_delta;
  ConvElement star_delta;
  ConvElement conv_delta_e;
  ConvElement star_delta_e;
};

LemmaForms lemma_closed_forms(const SystemPtr& sys, const AlgebraElement& a, int r,
                              const AlgebraElement& b, int s);

// ρ_r(a) = (1/k · α_{r⁻¹}(a)) • δ_e, a *-homomorphism A → (C_c(G,A), ⋆, *).
ConvElement rho(const SystemPtr& sys, int r, const AlgebraElement& a);

// Gaussian entries, then each group point zeroed with probability sparsity.
ConvElement random_conv(const SystemPtr& sys, Rng& rng, double sparsity = 0.5);

}  // namespace tcds

#include "tcds/verify.hpp"

#include <cmath>
#include <sstream>

namespace tcds {

namespace {

std::string sample_ar(int i, int r) {
  return "sample " + std::to_string(i) + ", r=" + std::to_string(r);
}

CheckRecord identity_record(std::string name, std::string sample, double lhs, double rhs,
                            double tol) {
  const double res = std::abs(lhs - rhs);
  return {std::move(name), std::move(sample), lhs, rhs, res, res <= tol};
}

CheckRecord inequality_record(std::string name, std::string sample, double lhs, double rhs,
                              double tol) {
  const double viol = lhs - rhs;  // negative = slack
  return {std::move(name), std::move(sample), lhs, rhs, viol, viol <= tol};
}

}  // namespace

bool TheoremReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

double TheoremReport::max_residual() const {
  double v = 0.0;
  bool first = true;
  for (const auto& c : checks) {
    if (first || c.residual > v) v = c.residual;
    first = false;
  }
  return v;
}

std::vector<CheckRecord> check_norm_identities(const SystemPtr& sys, const RepMap& rep,
                                               const AlgebraElement& a, int r, double tol) {
  const auto& G = sys->group;
  const int ri = G.inv(r);
  const AlgebraElement moved = apply(sys->alpha[ri], a);

  const double lhs = largest_singular_value(rep(delta(sys, a, r)));
  const double mid = largest_singular_value(rep(delta(sys, moved * sys->omega[ri][r], G.identity)));
  const double rhs = largest_singular_value(rep(delta(sys, moved, G.identity)));

  const std::string sample = "r=" + std::to_string(r);
  std::vector<CheckRecord> out;
  out.push_back(identity_record("First Norm Identity", sample, lhs, mid, tol));
  out.push_back(identity_record("Second Norm Identity", sample, mid, rhs, tol));
  out.push_back(identity_record("Main Norm Identity", sample, lhs, rhs, tol));
  return out;
}

std::vector<CheckRecord> check_main_inequality(const SystemPtr& sys, const RepMap& rep,
                                               int samples, std::uint64_t seed, double tol) {
  Rng rng(seed);
  const auto& G = sys->group;
  std::vector<CheckRecord> out;
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement a = random_element(sys->shape, rng);
    const int r = rng.uniform_int(G.order);
    const double norm_a = operator_norm(a);
    const std::string sample = sample_ar(i, r);

    const AlgebraElement moved = apply(sys->alpha[G.inv(r)], a);
    out.push_back(inequality_record(
        "First Norm Inequality", sample,
        largest_singular_value(rep(delta(sys, moved, G.identity))), sys->k * norm_a, tol));
    out.push_back(inequality_record("Main Norm Inequality", sample,
                                    largest_singular_value(rep(delta(sys, a, r))),
                                    sys->k * norm_a, tol));
    out.push_back(inequality_record("rho_r contractivity", sample,
                                    largest_singular_value(rep(rho(sys, r, a))), norm_a, tol));
  }
  return out;
}

TheoremReport check_contractivity(const SystemPtr& sys, const RepMap& rep, int samples,
                                  std::uint64_t seed, double tol) {
  TheoremReport report;
  report.seed = seed;
  report.samples = samples;
  report.tol = tol;
  Rng rng(seed);
  const int n = sys->group.order;
  for (int i = 0; i < samples; ++i) {
    const ConvElement f = random_conv(sys, rng);
    int support = 0;
    for (const auto& v : f.values)
      if (!is_zero(v)) ++support;
    const std::string sample =
        "sample " + std::to_string(i) + ", support " + std::to_string(support) + "/" +
        std::to_string(n);

    report.checks.push_back(inequality_record("Theorem contractivity", sample,
                                              largest_singular_value(rep(f)), l1_norm(f), tol));

    // the triangle step rests on f literally equalling Σ_r f(r)•δ_r
    ConvElement sum = zero_conv(sys);
    for (int r = 0; r < n; ++r) sum = sum + delta(sys, f.values[r], r);
    const double dist = conv_distance(f, sum);
    report.checks.push_back(
        {"decomposition audit", sample, dist, 0.0, dist, dist == 0.0});
  }
  return report;
}

TheoremReport verify_system(const SystemPtr& sys, std::uint64_t seed, int samples, double tol) {
  if (samples < 1) samples = 1;
  TheoremReport report;
  report.seed = seed;
  report.samples = samples;
  report.tol = tol;

  RegularRepresentation regular(sys);
  RepMap rep = [&regular](const ConvElement& f) { return regular.integrated(f); };

  Rng rng(seed);
  const auto& G = sys->group;

  // norm identity chain on random (a, r)
  const int n_id = std::max(1, samples / 5);
  for (int i = 0; i < n_id; ++i) {
    const AlgebraElement a = random_element(sys->shape, rng);
    const int r = rng.uniform_int(G.order);
    for (auto& rec : check_norm_identities(sys, rep, a, r, tol)) {
      rec.sample = sample_ar(i, r);
      report.checks.push_back(std::move(rec));
    }
  }

  // norm inequalities
  const int n_ineq = std::max(1, samples / 2);
  for (auto& rec : check_main_inequality(sys, rep, n_ineq, rng.next_u64(), tol))
    report.checks.push_back(std::move(rec));

  // ρ_r is a *-homomorphism into the convolution algebra
  for (int r = 0; r < G.order; ++r) {
    for (int i = 0; i < 3; ++i) {
      const AlgebraElement a = random_element(sys->shape, rng);
      const AlgebraElement b = random_element(sys->shape, rng);
      const std::string sample = "r=" + std::to_string(r) + ", pair " + std::to_string(i);
      const double mult = conv_distance(rho(sys, r, a * b),
                                        convolve(rho(sys, r, a), rho(sys, r, b)));
      report.checks.push_back({"rho_r multiplicative", sample, mult, 0.0, mult, mult <= tol});
      const double star = conv_distance(rho(sys, r, adjoint(a)), involute(rho(sys, r, a)));
      report.checks.push_back({"rho_r star-preserving", sample, star, 0.0, star, star <= tol});
    }
  }

  // L¹ contractivity on random elements
  for (auto& rec : check_contractivity(sys, rep, samples, rng.next_u64(), tol).checks)
    report.checks.push_back(std::move(rec));

  // tightness: ‖Π(1•δ_r)‖ = k = ‖1•δ_r‖₁ since U_r is unitary
  for (int r = 0; r < G.order; ++r) {
    const ConvElement f = delta(sys, unit_element(sys->shape), r);
    report.checks.push_back(identity_record("tightness at unital delta",
                                            "r=" + std::to_string(r),
                                            largest_singular_value(rep(f)), l1_norm(f), tol));
  }

  // scale covariance of both norms (relative), so contractivity is
  // scale-invariant; pinned at 1e−12 independent of the caller tolerance
  for (int i = 0; i < 2; ++i) {
    const ConvElement f = random_conv(sys, rng, 0.25);
    const cplx lambda(1.5 + rng.uniform(), -2.0 * rng.uniform());
    const ConvElement g = lambda * f;
    const double mag = std::abs(lambda);
    const std::string sample = "sample " + std::to_string(i);

    const double rn_f = largest_singular_value(rep(f));
    const double rn_g = largest_singular_value(rep(g));
    const double rel_rep = std::abs(rn_g - mag * rn_f) / std::max(1.0, mag * rn_f);
    report.checks.push_back({"scale covariance (rep norm)", sample, rn_g, mag * rn_f, rel_rep,
                             rel_rep <= 1e-12});

    const double l1_f = l1_norm(f);
    const double l1_g = l1_norm(g);
    const double rel_l1 = std::abs(l1_g - mag * l1_f) / std::max(1.0, mag * l1_f);
    report.checks.push_back({"scale covariance (L1 norm)", sample, l1_g, mag * l1_f, rel_l1,
                             rel_l1 <= 1e-12});
  }

  return report;
}

// ---------------------------------------------------------------------------
// negative control on Z

ZFunction z_delta(int n) { return {{n, cplx(1.0, 0.0)}}; }

ZFunction z_convolve(const ZFunction& f, const ZFunction& g) {
  ZFunction h;
  for (const auto& [a, fa] : f)
    for (const auto& [b, gb] : g) h[a + b] += fa * gb;
  return h;
}

ZFunction z_involute(const ZFunction& f) {
  ZFunction h;
  for (const auto& [n, v] : f) h[-n] = std::conj(v);
  return h;
}

double z_l1(const ZFunction& f) {
  double s = 0.0;
  for (const auto& [n, v] : f) s += std::abs(v);
  return s;
}

cplx exp_functional(const ZFunction& f) {
  for (const auto& [n, v] : f)
    if (n > 700 || n < -700)
      throw overflow_error("exp_functional: |n| = " + std::to_string(std::abs(n)) +
                           " exceeds 700, e^n leaves double range");
  cplx s(0.0, 0.0);
  for (const auto& [n, v] : f) s += v * std::exp(static_cast<double>(n));
  return s;
}

std::vector<GrowthRow> counterexample_growth(int max_n) {
  if (max_n < 1) throw overflow_error("counterexample_growth: max_n must be >= 1");
  if (max_n > 700) throw overflow_error("counterexample_growth: max_n must be <= 700");
  std::vector<GrowthRow> rows;
  rows.reserve(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    GrowthRow row;
    row.n = n;
    const ZFunction d = z_delta(n);
    row.l1 = z_l1(d);
    row.phi_abs = std::abs(exp_functional(d));
    row.ratio = row.phi_abs / row.l1;
    row.phi_star = exp_functional(z_involute(d)).real();
    row.involution_violated =
        std::abs(row.phi_star - row.phi_abs) > 1e-12 * std::max(1.0, row.phi_abs);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tcds

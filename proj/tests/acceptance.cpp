// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds. Tolerances and system lists are pinned here on purpose — editing
// them is editing the contract.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "tcds/io.hpp"
#include "tcds/verify.hpp"

using namespace tcds;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// the contract's twenty systems
std::vector<SystemPtr> acceptance_systems(double k) {
  std::vector<SystemPtr> out;
  out.push_back(make_trivial_system(cyclic_group(2), AlgebraShape{{1}}, k));
  out.push_back(make_trivial_system(cyclic_group(6), AlgebraShape{{1, 2}}, k));
  for (int n = 2; n <= 5; ++n)
    for (int p = 0; p <= 1; ++p) out.push_back(make_rotation_system(n, p, k));
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    out.push_back(random_system(seed, cyclic_group(3), AlgebraShape{{2}}, k));
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    out.push_back(random_system(seed, direct_product(cyclic_group(2), cyclic_group(2)),
                                AlgebraShape{{2, 2}}, k));
  return out;
}

struct Criterion {
  bool pass = true;
  std::ostringstream note;
};

int failures = 0;

void report(int index, const std::string& name, const Criterion& c, double secs) {
  std::printf("ACCEPTANCE %d %s %s (%s; %.2fs)\n", index, c.pass ? "PASS" : "FAIL", name.c_str(),
              c.note.str().c_str(), secs);
  if (!c.pass) ++failures;
}

void criterion_1_axioms() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  double worst = 0.0;
  int count = 0;
  for (const SystemPtr& sys : acceptance_systems(1.0)) {
    const ValidationReport rep = validate_system(*sys, 1e-10);
    worst = std::max(worst, rep.max_residual());
    if (!rep.pass()) c.pass = false;
    ++count;
  }
  const double secs = seconds_since(t0);
  if (worst > 1e-10) c.pass = false;
  if (secs >= 5.0) c.pass = false;
  c.note << count << " systems, max residual " << worst << ", budget 5s";
  report(1, "axiom suite", c, secs);
}

void criterion_2_lemma_forms() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  double worst = 0.0;
  for (double k : {0.5, 1.0, 2.0})
    for (const SystemPtr& sys : acceptance_systems(k)) {
      Rng rng(1234);
      const int n = sys->group.order;
      for (int pair = 0; pair < 10; ++pair) {
        const AlgebraElement a = random_element(sys->shape, rng);
        const AlgebraElement b = random_element(sys->shape, rng);
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) {
            const LemmaForms forms = lemma_closed_forms(sys, a, r, b, s);
            worst = std::max(worst, conv_distance(convolve(delta(sys, a, r), delta(sys, b, s)),
                                                  forms.conv_delta));
            worst = std::max(worst,
                             conv_distance(involute(delta(sys, a, r)), forms.star_delta));
          }
      }
    }
  const double secs = seconds_since(t0);
  if (worst > 1e-11) c.pass = false;
  if (secs >= 10.0) c.pass = false;
  c.note << "exhaustive (r,s) x 10 pairs x k in {0.5,1,2}, max residual " << worst
         << ", budget 10s";
  report(2, "Lemma 3.2 closed-form equivalence", c, secs);
}

void criterion_3_algebra_laws() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  double worst_assoc = 0.0, worst_anti = 0.0;
  for (const SystemPtr& sys : acceptance_systems(1.0)) {
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
      const ConvElement f = random_conv(sys, rng);
      const ConvElement g = random_conv(sys, rng);
      const ConvElement h = random_conv(sys, rng);
      const double assoc =
          conv_distance(convolve(convolve(f, g), h), convolve(f, convolve(g, h))) /
          (1.0 + l1_norm(f) * l1_norm(g) * l1_norm(h));
      worst_assoc = std::max(worst_assoc, assoc);
      worst_anti = std::max(
          worst_anti, conv_distance(involute(convolve(f, g)), convolve(involute(g), involute(f))));
    }
  }
  if (worst_assoc > 1e-10 || worst_anti > 1e-10) c.pass = false;
  c.note << "50 triples/pairs per system; assoc " << worst_assoc << ", anti-mult " << worst_anti;
  report(3, "associativity and anti-multiplicativity", c, seconds_since(t0));
}

void criterion_4_star_homomorphism() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  double worst = 0.0;
  for (const SystemPtr& sys : acceptance_systems(1.0)) {
    const RegularRepresentation rep(sys);
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
      const ConvElement f = random_conv(sys, rng);
      const ConvElement g = random_conv(sys, rng);
      const Mat pf = rep.integrated(f);
      const Mat pg = rep.integrated(g);
      worst = std::max(worst,
                       largest_singular_value(rep.integrated(convolve(f, g)) - pf * pg));
      worst = std::max(worst,
                       largest_singular_value(rep.integrated(involute(f)) - pf.adjoint()));
    }
    if (worst > 1e-9) break;
  }
  if (worst > 1e-9) c.pass = false;
  c.note << "50 pairs per system, max residual " << worst;
  report(4, "regular representation is a *-homomorphism", c, seconds_since(t0));
}

void criterion_5_theorem_chain() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  double worst_identity = 0.0, worst_slack = -1.0, worst_contract = -1.0, worst_tight = 0.0;

  for (const SystemPtr& sys : acceptance_systems(1.0)) {
    const RepMap rep = regular_rep_map(sys);
    Rng rng(55);
    for (int i = 0; i < 20; ++i) {
      const AlgebraElement a = random_element(sys->shape, rng);
      const int r = rng.uniform_int(sys->group.order);
      for (const auto& recd : check_norm_identities(sys, rep, a, r, 1e-9))
        worst_identity = std::max(worst_identity, recd.residual);
    }
    for (const auto& recd : check_main_inequality(sys, rep, 20, 56, 1e-10))
      if (recd.check == "Main Norm Inequality")
        worst_slack = std::max(worst_slack, recd.residual);
  }

  for (double k : {0.5, 1.0, 2.0})
    for (const SystemPtr& sys : acceptance_systems(k)) {
      const RepMap rep = regular_rep_map(sys);
      const TheoremReport batch = check_contractivity(sys, rep, 100, 57, 1e-9);
      for (const auto& recd : batch.checks)
        if (recd.check == "Theorem contractivity")
          worst_contract = std::max(worst_contract, recd.residual);
    }

  // tightness on scalar-cocycle systems at k = 1
  std::vector<SystemPtr> scalar;
  scalar.push_back(make_trivial_system(cyclic_group(2), AlgebraShape{{1}}, 1.0));
  for (int n = 2; n <= 5; ++n)
    for (int p = 0; p <= 1; ++p) scalar.push_back(make_rotation_system(n, p, 1.0));
  for (const SystemPtr& sys : scalar) {
    const RegularRepresentation rep(sys);
    for (int r = 0; r < sys->group.order; ++r) {
      const ConvElement f = delta(sys, unit_element(sys->shape), r);
      worst_tight = std::max(worst_tight, std::abs(rep.norm(f) - l1_norm(f)));
    }
  }

  if (worst_identity > 1e-9) c.pass = false;
  if (worst_slack > 1e-10) c.pass = false;
  if (worst_contract > 1e-9) c.pass = false;
  if (worst_tight > 1e-10) c.pass = false;
  c.note << "identities " << worst_identity << ", Main Norm Inequality violation " << worst_slack
         << ", contractivity violation " << worst_contract << ", tightness gap " << worst_tight;
  report(5, "Theorem chain and L1 contractivity", c, seconds_since(t0));
}

void criterion_6_rho_maps() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  double worst_id = 0.0, worst_norm = -1.0;
  for (const SystemPtr& sys : acceptance_systems(1.0)) {
    const RegularRepresentation rep(sys);
    Rng rng(31);
    for (int r = 0; r < sys->group.order; ++r)
      for (int i = 0; i < 10; ++i) {
        const AlgebraElement a = random_element(sys->shape, rng);
        const AlgebraElement b = random_element(sys->shape, rng);
        worst_id = std::max(worst_id, conv_distance(rho(sys, r, a * b),
                                                    convolve(rho(sys, r, a), rho(sys, r, b))));
        worst_id = std::max(
            worst_id, conv_distance(rho(sys, r, adjoint(a)), involute(rho(sys, r, a))));
        worst_norm =
            std::max(worst_norm, rep.norm(rho(sys, r, a)) - operator_norm(a));
      }
  }
  if (worst_id > 1e-11) c.pass = false;
  if (worst_norm > 1e-9) c.pass = false;
  c.note << "all r, 10 draws per system; identity residual " << worst_id
         << ", contractivity violation " << worst_norm;
  report(6, "rho_r *-homomorphism and contractivity", c, seconds_since(t0));
}

void criterion_7_counterexample() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
  const auto rows = counterexample_growth(20);
  double worst_rel = 0.0;
  bool involution_ok = rows.size() == 21 && !rows[0].involution_violated;
  double e_power = 1.0;
  const double e = std::exp(1.0);
  for (const auto& row : rows) {
    worst_rel = std::max(worst_rel, std::abs(row.ratio - e_power) / e_power);
    if (row.n >= 1 && !row.involution_violated) involution_ok = false;
    e_power *= e;
  }
  const cplx lhs = exp_functional(z_convolve(z_delta(1), z_delta(2)));
  const cplx rhs = exp_functional(z_delta(1)) * exp_functional(z_delta(2));
  const double mult_rel = std::abs(lhs - rhs) / std::abs(rhs);

  if (worst_rel > 1e-12) c.pass = false;
  if (mult_rel > 1e-9) c.pass = false;
  if (!involution_ok) c.pass = false;
  c.note << "ratio rel err " << worst_rel << ", phi(d1*d2) rel err " << mult_rel
         << ", involution failure recorded for n=1..20: " << (involution_ok ? "yes" : "no");
  report(7, "unbounded counterexample", c, seconds_since(t0));
}

void criterion_8_determinism() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c;
#ifndef TCDS_BIN_PATH
  c.pass = false;
  c.note << "tcds binary path not wired in";
#else
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tcds_acceptance_8";
  fs::create_directories(dir);
  const std::string sys = (dir / "sys.json").string();
  const std::string r1 = (dir / "r1.json").string();
  const std::string r2 = (dir / "r2.json").string();
  auto shell = [](const std::string& cmd) { return std::system(cmd.c_str()); };
  const std::string bin = TCDS_BIN_PATH;
  bool ok = shell(bin + " gen --kind random --group z3 --blocks 2 --seed 1 -o " + sys +
                  " > /dev/null") == 0;
  ok = ok && shell(bin + " verify --system " + sys + " --seed 9 --samples 60 --report " + r1 +
                   " > /dev/null") == 0;
  ok = ok && shell(bin + " verify --system " + sys + " --seed 9 --samples 60 --report " + r2 +
                   " > /dev/null") == 0;
  std::string s1, s2;
  if (ok) {
    std::ifstream f1(r1), f2(r2);
    s1.assign((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    s2.assign((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  }
  if (!ok || s1.empty() || s1 != s2) c.pass = false;
  c.note << "two `tcds verify --seed 9` reports "
         << (c.pass ? "byte-identical" : "differ or failed");
  fs::remove_all(dir);
#endif
  report(8, "verify determinism", c, seconds_since(t0));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1_axioms();
  criterion_2_lemma_forms();
  criterion_3_algebra_laws();
  criterion_4_star_homomorphism();
  criterion_5_theorem_chain();
  criterion_6_rho_maps();
  criterion_7_counterexample();
  criterion_8_determinism();
  const double total = seconds_since(t0);
  std::printf("ACCEPTANCE total %.2fs (target < 60s), %d criterion failure(s)\n", total,
              failures);
  return failures == 0 ? 0 : 1;
}

#include "tcds/system.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace tcds {

namespace {

std::string pair_str(int r, int s) {
  return "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

std::string triple_str(int r, int s, int t) {
  return "(r,s,t)=(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) +
         ")";
}

// Structural sanity of tables and shapes; the axiom residuals assume this.
void check_structure(const TwistedSystem& sys) {
  const int n = sys.group.order;
  if (n <= 0) throw shape_mismatch("system: empty group");
  if (sys.shape.blocks.empty()) throw shape_mismatch("system: empty algebra shape");
  for (int b : sys.shape.blocks)
    if (b < 1) throw shape_mismatch("system: block dimension < 1");
  if (!(sys.k > 0.0)) throw shape_mismatch("system: Haar scale k must be positive");
  if (static_cast<int>(sys.alpha.size()) != n)
    throw shape_mismatch("system: alpha table has wrong length");
  if (static_cast<int>(sys.omega.size()) != n)
    throw shape_mismatch("system: omega table has wrong number of rows");
  for (const auto& row : sys.omega)
    if (static_cast<int>(row.size()) != n)
      throw shape_mismatch("system: omega table has a wrong-length row");
  for (const auto& phi : sys.alpha)
    if (!(phi.shape == sys.shape)) throw shape_mismatch("system: alpha entry shape differs");
  for (const auto& row : sys.omega)
    for (const auto& w : row) {
      if (!(w.shape == sys.shape)) throw shape_mismatch("system: omega entry shape differs");
      if (!all_finite(w)) throw shape_mismatch("system: omega entry has non-finite values");
    }
}

}  // namespace

bool ValidationReport::pass() const {
  for (const auto& c : checks)
    if (c.status == AxiomStatus::fail) return false;
  return true;
}

double ValidationReport::max_residual() const {
  double v = 0.0;
  for (const auto& c : checks)
    if (c.status != AxiomStatus::vacuous) v = std::max(v, c.residual);
  return v;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (pass() ? "pass" : "FAIL") << ", max residual " << max_residual() << " at tol " << tol;
  for (const auto& c : checks)
    if (c.status == AxiomStatus::fail)
      os << "; failed: " << c.axiom << " (residual " << c.residual
         << (c.detail.empty() ? "" : ", " + c.detail) << ")";
  return os.str();
}

ValidationReport validate_system(const TwistedSystem& sys, double tol) {
  check_structure(sys);

  ValidationReport rep;
  rep.tol = tol;
  const auto& G = sys.group;
  const int n = G.order;
  const int e = G.identity;
  const auto basis = basis_elements(sys.shape);

  auto add = [&rep](std::string name, AxiomStatus st, double res, std::string detail) {
    rep.checks.push_back({std::move(name), st, res, std::move(detail)});
  };
  auto add_residual = [&](std::string name, double res, std::string detail) {
    add(std::move(name), res <= tol ? AxiomStatus::pass : AxiomStatus::fail, res,
        std::move(detail));
  };

  // (1) group structure
  try {
    check_group(G);
    add("(1) G is a finite group", AxiomStatus::pass, 0.0, "");
  } catch (const not_a_group& err) {
    add("(1) G is a finite group", AxiomStatus::fail, 1.0, err.what());
  }

  // (2) algebra structure: shape already checked above
  add("(2) A is a finite-dimensional C*-algebra", AxiomStatus::pass, 0.0,
      "blocks checked structurally");

  // (3),(4) continuity: nothing to test over a finite discrete group
  add("(3) alpha strongly continuous", AxiomStatus::vacuous, 0.0, "vacuous (finite discrete G)");
  add("(4) omega strictly continuous", AxiomStatus::vacuous, 0.0, "vacuous (finite discrete G)");

  // alpha entries are structural *-automorphisms: perm valid, units unitary
  {
    double worst = 0.0;
    std::string detail;
    AxiomStatus st = AxiomStatus::pass;
    for (int r = 0; r < n && st == AxiomStatus::pass; ++r) {
      try {
        check_automorphism(sys.alpha[r], tol);
      } catch (const error& err) {
        st = AxiomStatus::fail;
        worst = 1.0;
        detail = "r=" + std::to_string(r) + ": " + err.what();
      }
    }
    add("(3') alpha values are *-automorphisms", st, worst, detail);
  }

  // (4') omega takes unitary values
  {
    double worst = 0.0;
    int wr = 0, ws = 0;
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        const auto& w = sys.omega[r][s];
        const AlgebraElement unit = unit_element(sys.shape);
        const double res = std::max(operator_norm(adjoint(w) * w - unit),
                                    operator_norm(w * adjoint(w) - unit));
        if (res > worst) {
          worst = res;
          wr = r;
          ws = s;
        }
      }
    add_residual("(4') omega maps into U(M(A))", worst, "worst at " + pair_str(wr, ws));
  }

  // (5) normalization: alpha_e = Id on a basis, omega(e,r) = omega(r,e) = 1
  {
    double worst = 0.0;
    for (const auto& m : basis)
      worst = std::max(worst, operator_norm(apply(sys.alpha[e], m) - m));
    add_residual("(5) alpha_e = Id_A", worst, "");
  }
  {
    double worst = 0.0;
    int wr = 0;
    const AlgebraElement unit = unit_element(sys.shape);
    for (int r = 0; r < n; ++r) {
      const double res = std::max(operator_norm(sys.omega[e][r] - unit),
                                  operator_norm(sys.omega[r][e] - unit));
      if (res > worst) {
        worst = res;
        wr = r;
      }
    }
    add_residual("(5) omega(e,r) = omega(r,e) = 1", worst, "worst at r=" + std::to_string(wr));
  }

  // (6) twisted composition: alpha_r alpha_s = Ad(omega(r,s)) alpha_{rs},
  // evaluated on a linear basis of A (both sides are linear in the argument)
  {
    double worst = 0.0;
    int wr = 0, ws = 0;
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        const int rs = G.mul(r, s);
        const auto& w = sys.omega[r][s];
        const AlgebraElement wstar = adjoint(w);
        for (const auto& m : basis) {
          const AlgebraElement lhs = apply(sys.alpha[r], apply(sys.alpha[s], m));
          const AlgebraElement rhs = w * apply(sys.alpha[rs], m) * wstar;
          const double res = operator_norm(lhs - rhs);
          if (res > worst) {
            worst = res;
            wr = r;
            ws = s;
          }
        }
      }
    add_residual("(6) alpha_r alpha_s = Ad(omega(r,s)) alpha_{rs}", worst,
                 "worst at " + pair_str(wr, ws));
  }

  // (7) cocycle identity, exhaustive over G^3
  {
    double worst = 0.0;
    int wr = 0, ws = 0, wt = 0;
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          const AlgebraElement lhs =
              apply(sys.alpha[r], sys.omega[s][t]) * sys.omega[r][G.mul(s, t)];
          const AlgebraElement rhs = sys.omega[r][s] * sys.omega[G.mul(r, s)][t];
          const double res = operator_norm(lhs - rhs);
          if (res > worst) {
            worst = res;
            wr = r;
            ws = s;
            wt = t;
          }
        }
    add_residual("(7) alpha_r(omega(s,t)) omega(r,st) = omega(r,s) omega(rs,t)", worst,
                 "worst at " + triple_str(wr, ws, wt));
  }

  return rep;
}

namespace {

SystemPtr finish(TwistedSystem sys, double tol, const char* who) {
  auto ptr = std::make_shared<const TwistedSystem>(std::move(sys));
  ValidationReport rep = validate_system(*ptr, tol);
  if (!rep.pass())
    throw invalid_system(std::string(who) + ": generated system failed validation: " +
                             rep.summary(),
                         std::move(rep));
  return ptr;
}

}  // namespace

SystemPtr make_trivial_system(FiniteGroup g, AlgebraShape shape, double k) {
  TwistedSystem sys;
  const int n = g.order;
  sys.group = std::move(g);
  sys.shape = shape;
  sys.k = k;
  sys.alpha.assign(n, identity_automorphism(shape));
  sys.omega.assign(n, std::vector<AlgebraElement>(n, unit_element(shape)));
  return finish(std::move(sys), 1e-12, "make_trivial_system");
}

SystemPtr make_rotation_system(int n, int p, double k) {
  if (n < 2) throw invalid_order("rotation system needs n >= 2, got " + std::to_string(n));
  TwistedSystem sys;
  sys.group = direct_product(cyclic_group(n), cyclic_group(n));
  sys.shape = AlgebraShape{{1}};
  sys.k = k;
  const int order = sys.group.order;
  sys.alpha.assign(order, identity_automorphism(sys.shape));
  sys.omega.assign(order, std::vector<AlgebraElement>(order, unit_element(sys.shape)));
  // element r = (a,b) is encoded as a*n + b; twist depends on b_r and a_s
  for (int r = 0; r < order; ++r)
    for (int s = 0; s < order; ++s) {
      const int b = r % n;
      const int c = s / n;
      const double angle = 2.0 * M_PI * static_cast<double>(p) * b * c / n;
      sys.omega[r][s].mats[0](0, 0) = std::polar(1.0, angle);
    }
  return finish(std::move(sys), 1e-10, "make_rotation_system");
}

SystemPtr make_inner_twist_system(FiniteGroup g, std::vector<AlgebraElement> u, double k) {
  const int n = g.order;
  if (static_cast<int>(u.size()) != n)
    throw shape_mismatch("inner twist: need one unitary per group element");
  const AlgebraShape shape = u.empty() ? AlgebraShape{} : u[0].shape;
  for (int r = 0; r < n; ++r) {
    if (!(u[r].shape == shape)) throw shape_mismatch("inner twist: unitary shapes differ");
    if (!is_unitary(u[r], 1e-10))
      throw not_unitary("inner twist: u[" + std::to_string(r) + "] is not unitary");
  }
  if (elem_distance(u[g.identity], unit_element(shape)) > 1e-12)
    throw not_unitary("inner twist: u[e] must be the unit");

  TwistedSystem sys;
  sys.shape = shape;
  sys.k = k;
  sys.alpha.reserve(n);
  for (int r = 0; r < n; ++r) sys.alpha.push_back(inner_automorphism(u[r]));
  sys.omega.assign(n, std::vector<AlgebraElement>(n, unit_element(shape)));
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) sys.omega[r][s] = u[r] * u[s] * adjoint(u[g.mul(r, s)]);
  sys.group = std::move(g);
  return finish(std::move(sys), 1e-9, "make_inner_twist_system");
}

SystemPtr random_system(std::uint64_t seed, FiniteGroup g, const AlgebraShape& shape, double k) {
  Rng rng(seed);
  std::vector<AlgebraElement> u;
  u.reserve(g.order);
  for (int r = 0; r < g.order; ++r)
    u.push_back(r == g.identity ? unit_element(shape) : random_unitary_element(shape, rng));
  return make_inner_twist_system(std::move(g), std::move(u), k);
}

}  // namespace tcds

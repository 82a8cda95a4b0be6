#include "tcds/rep.hpp"

namespace tcds {

Mat standard_rep(const AlgebraElement& a) {
  const int d = a.shape.dim_rep();
  Mat m = Mat::Zero(d, d);
  int off = 0;
  for (std::size_t i = 0; i < a.mats.size(); ++i) {
    const int b = a.shape.blocks[i];
    m.block(off, off, b, b) = a.mats[i];
    off += b;
  }
  return m;
}

namespace {

// Operator-norm residual with a cheap certificate: entrywise max times the
// dimension bounds the norm, so the SVD only runs on suspicious differences.
double residual_norm(const Mat& diff, double tol) {
  const double screen = mat_max_abs(diff);
  if (screen * diff.rows() <= tol) return screen * diff.rows();
  return largest_singular_value(diff);
}

[[noreturn]] void covariance_failure(const std::string& what, double res, double tol,
                                     const std::string& detail) {
  ValidationReport rep;
  rep.tol = tol;
  rep.checks.push_back({what, AxiomStatus::fail, res, detail});
  throw invalid_system("regular representation: covariance contract failed: " + what + " (" +
                           detail + ", residual " + std::to_string(res) + ")",
                       std::move(rep));
}

}  // namespace

RegularRepresentation::RegularRepresentation(SystemPtr sys, double tol) : sys_(std::move(sys)) {
  if (!sys_) throw system_mismatch("regular representation: null system");
  const auto& G = sys_->group;
  const int n = G.order;
  const int d = sys_->shape.dim_rep();
  dim_ = n * d;

  u_.assign(n, Mat::Zero(dim_, dim_));
  for (int r = 0; r < n; ++r)
    for (int x = 0; x < n; ++x) {
      const int src = G.mul(G.inv(r), x);  // ξ(r⁻¹x) feeds coordinate x
      u_[r].block(x * d, src * d, d, d) = standard_rep(sys_->omega[G.inv(x)][r]);
    }

  // Contract checks, exhaustive over G (and a basis of A for covariance).
  const Mat id = Mat::Identity(dim_, dim_);
  {
    const double res = residual_norm(u_[G.identity] - id, tol);
    if (res > tol)
      covariance_failure("U_e = 1", res, tol, "r=" + std::to_string(G.identity));
  }
  for (int r = 0; r < n; ++r) {
    const double res = residual_norm(u_[r] * u_[r].adjoint() - id, tol);
    if (res > tol) covariance_failure("U_r unitary", res, tol, "r=" + std::to_string(r));
  }
  const auto basis = basis_elements(sys_->shape);
  for (int r = 0; r < n; ++r) {
    const Mat& ur = u_[r];
    for (const auto& m : basis) {
      const Mat lhs = ur * algebra_op(m) * ur.adjoint();
      const Mat rhs = algebra_op(apply(sys_->alpha[r], m));
      const double res = residual_norm(lhs - rhs, tol);
      if (res > tol)
        covariance_failure("U_r pi~(a) U_r* = pi~(alpha_r(a))", res, tol,
                           "r=" + std::to_string(r));
    }
  }
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      const Mat lhs = u_[r] * u_[s];
      const Mat rhs = algebra_op(sys_->omega[r][s]) * u_[G.mul(r, s)];
      const double res = residual_norm(lhs - rhs, tol);
      if (res > tol)
        covariance_failure("U_r U_s = pi~(omega(r,s)) U_{rs}", res, tol,
                           "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")");
    }
}

Mat RegularRepresentation::algebra_op(const AlgebraElement& a) const {
  const auto& G = sys_->group;
  const int d = sys_->shape.dim_rep();
  Mat m = Mat::Zero(dim_, dim_);
  for (int x = 0; x < G.order; ++x)
    m.block(x * d, x * d, d, d) = standard_rep(apply(sys_->alpha[G.inv(x)], a));
  return m;
}

Mat RegularRepresentation::integrated(const ConvElement& f) const {
  if (f.system != sys_)
    throw system_mismatch("integrated: element belongs to a different system");
  const auto& G = sys_->group;
  const int d = sys_->shape.dim_rep();
  Mat m = Mat::Zero(dim_, dim_);
  // Π(f) = Σ_y k·π̃(f(y))U_y lands one term per block: at (x,z) only y = xz⁻¹.
  for (int x = 0; x < G.order; ++x) {
    const int xi = G.inv(x);
    for (int z = 0; z < G.order; ++z) {
      const int y = G.mul(x, G.inv(z));
      if (is_zero(f.values[y])) continue;
      const AlgebraElement a = apply(sys_->alpha[xi], f.values[y]) * sys_->omega[xi][y];
      m.block(x * d, z * d, d, d) = sys_->k * standard_rep(a);
    }
  }
  return m;
}

double RegularRepresentation::norm(const ConvElement& f) const {
  return largest_singular_value(integrated(f));
}

RepMap regular_rep_map(SystemPtr sys) {
  auto rep = std::make_shared<RegularRepresentation>(std::move(sys));
  return [rep](const ConvElement& f) { return rep->integrated(f); };
}

double rep_norm(const RegularRepresentation& rep, const ConvElement& f) { return rep.norm(f); }

}  // namespace tcds

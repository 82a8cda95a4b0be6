#include "tcds/algebra.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace tcds {

namespace {

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b, const char* op) {
  if (!(a.shape == b.shape)) throw shape_mismatch(std::string(op) + ": element shapes differ");
}

void require_shape(const StarAutomorphism& phi, const AlgebraElement& a) {
  if (!(phi.shape == a.shape))
    throw shape_mismatch("automorphism and element shapes differ");
}

}  // namespace

int AlgebraShape::dim_rep() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

AlgebraElement zero_element(const AlgebraShape& shape) {
  AlgebraElement a;
  a.shape = shape;
  a.mats.reserve(shape.blocks.size());
  for (int n : shape.blocks) a.mats.push_back(Mat::Zero(n, n));
  return a;
}

AlgebraElement unit_element(const AlgebraShape& shape) {
  AlgebraElement a;
  a.shape = shape;
  a.mats.reserve(shape.blocks.size());
  for (int n : shape.blocks) a.mats.push_back(Mat::Identity(n, n));
  return a;
}

std::vector<AlgebraElement> basis_elements(const AlgebraShape& shape) {
  std::vector<AlgebraElement> out;
  for (std::size_t b = 0; b < shape.blocks.size(); ++b) {
    const int n = shape.blocks[b];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        AlgebraElement m = zero_element(shape);
        m.mats[b](i, j) = 1.0;
        out.push_back(std::move(m));
      }
  }
  return out;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "add");
  AlgebraElement out = a;
  for (std::size_t i = 0; i < out.mats.size(); ++i) out.mats[i] += b.mats[i];
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "sub");
  AlgebraElement out = a;
  for (std::size_t i = 0; i < out.mats.size(); ++i) out.mats[i] -= b.mats[i];
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "mul");
  AlgebraElement out;
  out.shape = a.shape;
  out.mats.reserve(a.mats.size());
  for (std::size_t i = 0; i < a.mats.size(); ++i) out.mats.push_back(a.mats[i] * b.mats[i]);
  return out;
}

AlgebraElement operator*(const cplx& lambda, const AlgebraElement& a) {
  AlgebraElement out = a;
  for (auto& m : out.mats) m *= lambda;
  return out;
}

AlgebraElement& operator+=(AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "add");
  for (std::size_t i = 0; i < a.mats.size(); ++i) a.mats[i] += b.mats[i];
  return a;
}

AlgebraElement adjoint(const AlgebraElement& a) {
  AlgebraElement out;
  out.shape = a.shape;
  out.mats.reserve(a.mats.size());
  for (const auto& m : a.mats) out.mats.push_back(m.adjoint());
  return out;
}

double largest_singular_value(const Mat& m) {
  if (m.rows() < 64) {
    Eigen::JacobiSVD<Mat> svd(m);
    if (svd.info() != Eigen::Success) throw numerical_failure("SVD did not converge");
    return svd.singularValues()(0);
  }
  Eigen::BDCSVD<Mat> svd(m);
  if (svd.info() != Eigen::Success) throw numerical_failure("SVD did not converge");
  return svd.singularValues()(0);
}

double mat_max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

double operator_norm(const AlgebraElement& a) {
  double norm = 0.0;
  for (const auto& m : a.mats) norm = std::max(norm, largest_singular_value(m));
  return norm;
}

bool is_unitary(const AlgebraElement& a, double tol) {
  for (const auto& m : a.mats) {
    const Mat id = Mat::Identity(m.rows(), m.cols());
    if (largest_singular_value(m.adjoint() * m - id) > tol) return false;
    if (largest_singular_value(m * m.adjoint() - id) > tol) return false;
  }
  return true;
}

bool is_zero(const AlgebraElement& a) {
  for (const auto& m : a.mats)
    if ((m.array() != cplx(0.0)).any()) return false;
  return true;
}

bool all_finite(const AlgebraElement& a) {
  for (const auto& m : a.mats)
    if (!m.allFinite()) return false;
  return true;
}

double elem_max_abs(const AlgebraElement& a) {
  double v = 0.0;
  for (const auto& m : a.mats) v = std::max(v, m.cwiseAbs().maxCoeff());
  return v;
}

double elem_distance(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "distance");
  double v = 0.0;
  for (std::size_t i = 0; i < a.mats.size(); ++i)
    v = std::max(v, (a.mats[i] - b.mats[i]).cwiseAbs().maxCoeff());
  return v;
}

StarAutomorphism identity_automorphism(const AlgebraShape& shape) {
  StarAutomorphism phi;
  phi.shape = shape;
  phi.perm.resize(shape.blocks.size());
  std::iota(phi.perm.begin(), phi.perm.end(), 0);
  phi.units.reserve(shape.blocks.size());
  for (int n : shape.blocks) phi.units.push_back(Mat::Identity(n, n));
  return phi;
}

StarAutomorphism inner_automorphism(const AlgebraElement& u) {
  StarAutomorphism phi;
  phi.shape = u.shape;
  phi.perm.resize(u.shape.blocks.size());
  std::iota(phi.perm.begin(), phi.perm.end(), 0);
  phi.units = u.mats;
  return phi;
}

AlgebraElement apply(const StarAutomorphism& phi, const AlgebraElement& a) {
  require_shape(phi, a);
  AlgebraElement out;
  out.shape = a.shape;
  out.mats.reserve(a.mats.size());
  for (std::size_t i = 0; i < a.mats.size(); ++i)
    out.mats.push_back(phi.units[i] * a.mats[phi.perm[i]] * phi.units[i].adjoint());
  return out;
}

StarAutomorphism compose(const StarAutomorphism& phi, const StarAutomorphism& psi) {
  if (!(phi.shape == psi.shape)) throw shape_mismatch("compose: automorphism shapes differ");
  StarAutomorphism out;
  out.shape = phi.shape;
  const std::size_t m = phi.perm.size();
  out.perm.resize(m);
  out.units.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.perm[i] = psi.perm[phi.perm[i]];
    out.units.push_back(phi.units[i] * psi.units[phi.perm[i]]);
  }
  return out;
}

StarAutomorphism inverse(const StarAutomorphism& phi) {
  StarAutomorphism out;
  out.shape = phi.shape;
  const std::size_t m = phi.perm.size();
  out.perm.resize(m);
  out.units.resize(m);
  std::vector<int> pinv(m);
  for (std::size_t i = 0; i < m; ++i) pinv[phi.perm[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < m; ++j) {
    out.perm[j] = pinv[j];
    out.units[j] = phi.units[pinv[j]].adjoint();
  }
  return out;
}

void check_automorphism(const StarAutomorphism& phi, double tol) {
  const std::size_t m = phi.shape.blocks.size();
  if (phi.perm.size() != m || phi.units.size() != m)
    throw shape_mismatch("automorphism: perm/units size mismatch");
  std::vector<char> seen(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const int p = phi.perm[i];
    if (p < 0 || p >= static_cast<int>(m) || seen[p])
      throw shape_mismatch("automorphism: perm is not a permutation");
    seen[p] = 1;
    if (phi.shape.blocks[p] != phi.shape.blocks[i])
      throw shape_mismatch("automorphism: perm does not preserve block dimensions");
    const int n = phi.shape.blocks[i];
    if (phi.units[i].rows() != n || phi.units[i].cols() != n)
      throw shape_mismatch("automorphism: unit " + std::to_string(i) + " has wrong size");
    const Mat id = Mat::Identity(n, n);
    if (largest_singular_value(phi.units[i].adjoint() * phi.units[i] - id) > tol)
      throw not_unitary("automorphism unit " + std::to_string(i) + " is not unitary");
  }
}

Mat haar_unitary(int n, Rng& rng) {
  Mat z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = rng.cgaussian();
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ() * Mat::Identity(n, n);
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix column phases so the effective R has positive diagonal
  for (int j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    const double ad = std::abs(d);
    q.col(j) *= (ad > 0.0) ? d / ad : cplx(1.0);
  }
  return q;
}

AlgebraElement random_element(const AlgebraShape& shape, Rng& rng) {
  AlgebraElement a = zero_element(shape);
  for (auto& m : a.mats)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rng.cgaussian();
  return a;
}

AlgebraElement random_unitary_element(const AlgebraShape& shape, Rng& rng) {
  AlgebraElement a;
  a.shape = shape;
  a.mats.reserve(shape.blocks.size());
  for (int n : shape.blocks) a.mats.push_back(haar_unitary(n, rng));
  return a;
}

}  // namespace tcds

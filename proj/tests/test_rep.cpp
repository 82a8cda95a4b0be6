#include <doctest.h>

#include "oracles.hpp"
#include "tcds/rep.hpp"

using namespace tcds;

namespace {

std::vector<SystemPtr> rep_systems() {
  return {
      make_trivial_system(cyclic_group(6), AlgebraShape{{1, 2}}, 1.0),
      make_rotation_system(3, 1, 0.5),
      random_system(4, cyclic_group(3), AlgebraShape{{2}}, 2.0),
      random_system(5, direct_product(cyclic_group(2), cyclic_group(2)), AlgebraShape{{2, 2}},
                    1.0),
  };
}

// Π(f) straight from the definition, through dense operator products.
Mat integrated_by_definition(const RegularRepresentation& rep, const ConvElement& f) {
  const auto& sys = *rep.system();
  Mat sum = Mat::Zero(rep.dim(), rep.dim());
  for (int x = 0; x < sys.group.order; ++x)
    sum += sys.k * (rep.algebra_op(f.values[x]) * rep.unitary(x));
  return sum;
}

}  // namespace

TEST_CASE("standard_rep embeds blocks isometrically and multiplicatively") {
  const AlgebraShape shape{{1, 2}};
  Rng rng(3);
  const AlgebraElement a = random_element(shape, rng);
  const AlgebraElement b = random_element(shape, rng);
  const Mat ma = standard_rep(a);
  CHECK(ma.rows() == 3);
  CHECK(ma(0, 1) == cplx(0.0, 0.0));  // off-block stays zero
  CHECK(ma(1, 0) == cplx(0.0, 0.0));
  CHECK(ma(0, 0) == a.mats[0](0, 0));
  CHECK(ma(2, 1) == a.mats[1](1, 0));
  CHECK(mat_max_abs(standard_rep(a * b) - ma * standard_rep(b)) <= 1e-13);
  CHECK(mat_max_abs(standard_rep(adjoint(a)) - ma.adjoint()) == 0.0);
  CHECK(std::abs(largest_singular_value(ma) - operator_norm(a)) <= 1e-12);
}

TEST_CASE("regular representation dimensions and identity") {
  const SystemPtr sys = make_rotation_system(3, 1, 1.0);
  const RegularRepresentation rep(sys);
  CHECK(rep.dim() == 9);
  CHECK(mat_max_abs(rep.unitary(sys->group.identity) - Mat::Identity(9, 9)) == 0.0);
}

TEST_CASE("U_r acts as the twisted left shift") {
  for (const SystemPtr& sys : rep_systems()) {
    const RegularRepresentation rep(sys);
    const auto& G = sys->group;
    const int d = sys->shape.dim_rep();
    for (int r = 0; r < G.order; ++r) {
      const Mat& u = rep.unitary(r);
      // column (z,j) must hold π(ω((rz)⁻¹, r)) e_j in the rz fiber, zero elsewhere
      for (int z = 0; z < G.order; ++z) {
        const int rz = G.mul(r, z);
        const Mat w = standard_rep(sys->omega[G.inv(rz)][r]);
        for (int j = 0; j < d; ++j) {
          Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(rep.dim());
          expect.segment(rz * d, d) = w.col(j);
          REQUIRE(mat_max_abs(u.col(z * d + j) - expect) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("unitaries are unitary") {
  for (const SystemPtr& sys : rep_systems()) {
    const RegularRepresentation rep(sys);
    const Mat id = Mat::Identity(rep.dim(), rep.dim());
    for (int r = 0; r < sys->group.order; ++r) {
      const Mat& u = rep.unitary(r);
      CHECK(largest_singular_value(u * u.adjoint() - id) <= 1e-12);
    }
  }
}

TEST_CASE("integrated form equals the defining sum") {
  for (const SystemPtr& sys : rep_systems()) {
    const RegularRepresentation rep(sys);
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
      const ConvElement f = random_conv(sys, rng, 0.4);
      const Mat direct = integrated_by_definition(rep, f);
      CHECK(mat_max_abs(rep.integrated(f) - direct) <= 1e-12 * (1.0 + mat_max_abs(direct)));
    }
  }
}

TEST_CASE("integrated form is a *-homomorphism") {
  for (const SystemPtr& sys : rep_systems()) {
    const RegularRepresentation rep(sys);
    Rng rng(9);
    for (int i = 0; i < 15; ++i) {
      const ConvElement f = random_conv(sys, rng);
      const ConvElement g = random_conv(sys, rng);
      const Mat pf = rep.integrated(f);
      const Mat pg = rep.integrated(g);
      const double scale = 1.0 + largest_singular_value(pf) * largest_singular_value(pg);
      CHECK(largest_singular_value(rep.integrated(convolve(f, g)) - pf * pg) <= 1e-9 * scale);
      CHECK(largest_singular_value(rep.integrated(involute(f)) - pf.adjoint()) <=
            1e-10 * (1.0 + largest_singular_value(pf)));
    }
  }
}

TEST_CASE("unital deltas integrate to scaled unitaries") {
  for (const SystemPtr& sys : rep_systems()) {
    const RegularRepresentation rep(sys);
    for (int r = 0; r < sys->group.order; ++r) {
      const ConvElement f = delta(sys, unit_element(sys->shape), r);
      CHECK(mat_max_abs(rep.integrated(f) - sys->k * rep.unitary(r)) <= 1e-14 * sys->k);
      CHECK(std::abs(rep.norm(f) - sys->k) <= 1e-12 * sys->k);
    }
  }
}

TEST_CASE("representation norm agrees with the power-iteration oracle") {
  const SystemPtr sys = random_system(8, cyclic_group(4), AlgebraShape{{2}}, 1.0);
  const RegularRepresentation rep(sys);
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const ConvElement f = random_conv(sys, rng);
    const double svd = rep.norm(f);
    CHECK(std::abs(svd - oracle::power_iteration_norm(rep.integrated(f))) <=
          1e-9 * (1.0 + svd));
  }
}

TEST_CASE("constructor rejects systems that break the covariance contract") {
  const SystemPtr good = make_trivial_system(cyclic_group(3), AlgebraShape{{1}}, 1.0);
  CHECK_NOTHROW(RegularRepresentation{good});

  TwistedSystem bad = *good;
  bad.omega[1][1].mats[0](0, 0) = cplx(-1.0, 0.0);  // unitary, but no longer a cocycle
  CHECK_THROWS_AS(RegularRepresentation{std::make_shared<const TwistedSystem>(bad)},
                  invalid_system);

  TwistedSystem worse = *good;
  worse.omega[1][2].mats[0](0, 0) = cplx(0.5, 0.0);  // U_r loses unitarity
  CHECK_THROWS_AS(RegularRepresentation{std::make_shared<const TwistedSystem>(worse)},
                  invalid_system);
}

TEST_CASE("rep map is pinned to its system") {
  const SystemPtr a = make_trivial_system(cyclic_group(2), AlgebraShape{{1}}, 1.0);
  const SystemPtr b = make_trivial_system(cyclic_group(2), AlgebraShape{{1}}, 1.0);
  const RepMap rep = regular_rep_map(a);
  Rng rng(13);
  const ConvElement f = random_conv(a, rng);
  CHECK(rep(f).rows() == 2);
  const ConvElement g = random_conv(b, rng);
  CHECK_THROWS_AS(rep(g), system_mismatch);
}

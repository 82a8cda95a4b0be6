#include "tcds/conv.hpp"

namespace tcds {

namespace {

void require_system(const ConvElement& f) {
  if (!f.system) throw system_mismatch("convolution element has no system");
  if (static_cast<int>(f.values.size()) != f.system->group.order)
    throw system_mismatch("convolution element has wrong number of values");
}

void require_same_system(const ConvElement& f, const ConvElement& g) {
  require_system(f);
  require_system(g);
  if (f.system != g.system)
    throw system_mismatch("convolution elements belong to different systems");
}

}  // namespace

ConvElement zero_conv(const SystemPtr& sys) {
  if (!sys) throw system_mismatch("zero_conv: null system");
  ConvElement f;
  f.system = sys;
  f.values.assign(sys->group.order, zero_element(sys->shape));
  return f;
}

ConvElement delta(const SystemPtr& sys, const AlgebraElement& a, int r) {
  ConvElement f = zero_conv(sys);
  if (r < 0 || r >= sys->group.order)
    throw system_mismatch("delta: group index out of range: " + std::to_string(r));
  if (!(a.shape == sys->shape)) throw shape_mismatch("delta: coefficient shape mismatch");
  f.values[r] = a;
  return f;
}

ConvElement convolve(const ConvElement& f, const ConvElement& g) {
  require_same_system(f, g);
  const auto& sys = *f.system;
  const auto& G = sys.group;
  ConvElement h = zero_conv(f.system);
  for (int x = 0; x < G.order; ++x) {
    AlgebraElement acc = zero_element(sys.shape);
    for (int y = 0; y < G.order; ++y) {
      if (is_zero(f.values[y])) continue;
      const int z = G.mul(G.inv(y), x);  // y⁻¹x
      if (is_zero(g.values[z])) continue;
      acc += sys.k * (f.values[y] * apply(sys.alpha[y], g.values[z]) * sys.omega[y][z]);
    }
    h.values[x] = std::move(acc);
  }
  return h;
}

ConvElement involute(const ConvElement& f) {
  require_system(f);
  const auto& sys = *f.system;
  const auto& G = sys.group;
  ConvElement h = zero_conv(f.system);
  for (int x = 0; x < G.order; ++x) {
    const int xi = G.inv(x);
    if (is_zero(f.values[xi])) continue;
    h.values[x] = adjoint(sys.omega[x][xi]) * apply(sys.alpha[x], adjoint(f.values[xi]));
  }
  return h;
}

double l1_norm(const ConvElement& f) {
  require_system(f);
  double s = 0.0;
  for (const auto& a : f.values) s += f.system->k * operator_norm(a);
  return s;
}

ConvElement operator+(const ConvElement& f, const ConvElement& g) {
  require_same_system(f, g);
  ConvElement h = f;
  for (std::size_t x = 0; x < h.values.size(); ++x) h.values[x] += g.values[x];
  return h;
}

ConvElement operator-(const ConvElement& f, const ConvElement& g) {
  require_same_system(f, g);
  ConvElement h = f;
  for (std::size_t x = 0; x < h.values.size(); ++x)
    h.values[x] = h.values[x] - g.values[x];
  return h;
}

ConvElement operator*(const cplx& lambda, const ConvElement& f) {
  require_system(f);
  ConvElement h = f;
  for (auto& a : h.values) a = lambda * a;
  return h;
}

double conv_distance(const ConvElement& f, const ConvElement& g) {
  require_same_system(f, g);
  double d = 0.0;
  for (std::size_t x = 0; x < f.values.size(); ++x)
    d = std::max(d, elem_distance(f.values[x], g.values[x]));
  return d;
}

LemmaForms lemma_closed_forms(const SystemPtr& sys, const AlgebraElement& a, int r,
                              const AlgebraElement& b, int s) {
  if (!sys) throw system_mismatch("lemma_closed_forms: null system");
  const auto& G = sys->group;
  const int ri = G.inv(r);
  LemmaForms out;
  out.conv_delta =
      delta(sys, sys->k * (a * apply(sys->alpha[r], b) * sys->omega[r][s]), G.mul(r, s));
  out.star_delta = delta(sys, adjoint(sys->omega[ri][r]) * apply(sys->alpha[ri], adjoint(a)), ri);
  out.conv_delta_e = delta(sys, sys->k * (a * b), G.identity);
  out.star_delta_e = delta(sys, adjoint(a), G.identity);
  return out;
}

ConvElement rho(const SystemPtr& sys, int r, const AlgebraElement& a) {
  if (!sys) throw system_mismatch("rho: null system");
  const auto& G = sys->group;
  if (r < 0 || r >= G.order)
    throw system_mismatch("rho: group index out of range: " + std::to_string(r));
  return delta(sys, (1.0 / sys->k) * apply(sys->alpha[G.inv(r)], a), G.identity);
}

ConvElement random_conv(const SystemPtr& sys, Rng& rng, double sparsity) {
  ConvElement f = zero_conv(sys);
  for (auto& a : f.values) {
    const bool drop = rng.uniform() < sparsity;
    if (!drop) a = random_element(sys->shape, rng);
  }
  return f;
}

}  // namespace tcds

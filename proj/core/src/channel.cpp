#include "irsnoma/channel.hpp"

#include <cmath>

namespace irsnoma {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream derive_stream(std::uint64_t seed, std::uint64_t point_index) {
  return {seed, point_index};
}

RngStream child_stream(const RngStream& parent, std::uint64_t child_index) {
  return {parent.seed, mix64(parent.stream_id ^ (kGolden * (child_index + 1)))};
}

Xoshiro256pp::Xoshiro256pp(const RngStream& stream) {
  // splitmix64 walk over a state built from both identifiers
  std::uint64_t sm = mix64(stream.seed ^ mix64(stream.stream_id + kGolden));
  for (auto& w : s_) {
    sm += kGolden;
    w = mix64(sm);
  }
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGolden;
}

std::uint64_t Xoshiro256pp::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256pp::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Xoshiro256pp::next_exponential(double mean) {
  return -mean * std::log1p(-next_unit());
}

double Xoshiro256pp::next_gamma_int(int shape, double scale) {
  double sum = 0.0;
  for (int i = 0; i < shape; ++i) sum += -std::log1p(-next_unit());
  return scale * sum;
}

double cascade_gain(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s * s;
}

ChannelRealization sample_assumption(const SystemParams& p, Xoshiro256pp& gen) {
  const int hop2_shape = (p.hop2_shape == Hop2Shape::use_n) ? p.n_elems : p.m_elems;
  ChannelRealization r;
  r.g_sr = gen.next_gamma_int(p.n_elems, p.lambda_sr);
  r.g_rd1 = gen.next_gamma_int(hop2_shape, p.lambda_rd1);
  r.g_rd2 = gen.next_gamma_int(hop2_shape, p.lambda_rd2);
  r.g_rc = gen.next_exponential(p.lambda_rc);
  r.g_cr = gen.next_exponential(p.lambda_cr);
  r.g_cd1 = gen.next_exponential(p.lambda_cd1);
  r.g_cd2 = gen.next_exponential(p.lambda_cd2);
  return r;
}

namespace {

// Coherent sum of per-element double-Rayleigh products, each factor with unit
// mean-square (|h|^2 ~ Exp(1)), squared and scaled by the link lambda.
double sample_cascade(int elems, double lambda, Xoshiro256pp& gen) {
  double s = 0.0;
  for (int i = 0; i < elems; ++i) {
    const double e1 = -std::log1p(-gen.next_unit());
    const double e2 = -std::log1p(-gen.next_unit());
    s += std::sqrt(e1 * e2);
  }
  return lambda * s * s;
}

}  // namespace

ChannelRealization sample_physical(const SystemParams& p, Xoshiro256pp& gen) {
  ChannelRealization r;
  r.g_sr = sample_cascade(p.n_elems, p.lambda_sr, gen);
  r.g_rd1 = sample_cascade(p.m_elems, p.lambda_rd1, gen);
  r.g_rd2 = sample_cascade(p.m_elems, p.lambda_rd2, gen);
  r.g_rc = gen.next_exponential(p.lambda_rc);
  r.g_cr = gen.next_exponential(p.lambda_cr);
  r.g_cd1 = gen.next_exponential(p.lambda_cd1);
  r.g_cd2 = gen.next_exponential(p.lambda_cd2);
  return r;
}

}  // namespace irsnoma

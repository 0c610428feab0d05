#pragma once

#include <cstdint>
#include <span>

#include "irsnoma/params.hpp"

namespace irsnoma {

/// Identifies one reproducible random stream. Identical (seed, stream_id)
/// reproduce the identical sequence; the generator state is built by hashing
/// both fields, so distinct streams are statistically independent.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// Maps a run seed and a grid-point index to a stream. Injective by
/// construction (the pair is the stream).
RngStream derive_stream(std::uint64_t seed, std::uint64_t point_index);

/// Internal sub-stream derivation (Monte Carlo partitions). Deterministic
/// mixing of the parent stream id with the child index.
RngStream child_stream(const RngStream& parent, std::uint64_t child_index);

/// xoshiro256++ with splitmix64 seeding. Pure integer state transitions, so a
/// fixed stream reproduces bit-identically; the floating-point transforms
/// below depend only on the platform's log/sqrt.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(const RngStream& stream);

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53 random bits.
  double next_unit();

  /// Exponential with the given mean, by inverse CDF.
  double next_exponential(double mean);

  /// Gamma(shape k, scale) for integer k >= 1, as the sum of k independent
  /// exponentials. Exact for integer shapes; consumes exactly k uniforms.
  double next_gamma_int(int shape, double scale);

 private:
  std::uint64_t s_[4];
};

/// One draw of all link power gains.
struct ChannelRealization {
  double g_sr = 0.0;
  double g_rd1 = 0.0;
  double g_rd2 = 0.0;
  double g_rc = 0.0;
  double g_cr = 0.0;
  double g_cd1 = 0.0;
  double g_cd2 = 0.0;
};

/// Squared coherent magnitude sum of a per-element cascade with ideal phase
/// alignment: (sum_i a_i * b_i)^2 for element factor magnitudes a, b.
double cascade_gain(std::span<const double> a, std::span<const double> b);

/// Distributional-assumption sampling: g_sr ~ Gamma(N, lambda_sr);
/// g_rd1, g_rd2 ~ Gamma(N or M per hop2_shape, lambda_rd1/rd2); the direct
/// links exponential with their lambda means. All mutually independent.
ChannelRealization sample_assumption(const SystemParams& params, Xoshiro256pp& gen);

/// Physical per-element cascade: each IRS link is the squared coherent sum of
/// per-element double-Rayleigh magnitude products (unit mean-square per
/// factor), scaled by the link's lambda; hop 1 uses N elements, hop 2 uses M.
/// Direct links as in assumption mode.
ChannelRealization sample_physical(const SystemParams& params, Xoshiro256pp& gen);

}  // namespace irsnoma

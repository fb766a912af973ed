#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "cauchygeom/cauchy.hpp"
#include "cauchygeom/mixture.hpp"

namespace cauchygeom {

// splitmix64 stream, used to expand a 64-bit seed into generator state.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next();
};

// xoshiro256++ (Blackman-Vigna), state filled with four successive
// splitmix64 outputs of the seed. Pinned so estimates reproduce exactly
// across platforms and implementations.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);
  std::uint64_t next_u64();
  // Uniform double in the open interval (0,1): ((x >> 11) + 0.5) * 2^-53.
  double next_unit_open();

 private:
  std::array<std::uint64_t, 4> s_;
};

// Inverse-CDF draw: x = l + s tan(pi (U - 1/2)).
double sample_cauchy(Xoshiro256pp& rng, const CauchyParam& p);

struct McSpec {
  std::uint64_t sample_count = 1'000'000;
  std::uint64_t seed = 0;
  void validate() const;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t sample_count = 0;
};

// Monte-Carlo KL[m_theta : q]: draws from the mixture by component choice
// (Bernoulli(theta)) followed by an inverse-CDF Cauchy draw, and averages
// log(m_theta(x)/q(x)). Deterministic for a fixed seed; the generator is
// created inside the call, so concurrent calls are independent.
McEstimate mc_kl(const CauchyMixtureFamily& fam, double theta,
                 const std::function<double(double)>& q_density, const McSpec& spec);

McEstimate mc_kl_between_mixtures(const CauchyMixtureFamily& fam, double theta1, double theta2,
                                  const McSpec& spec);

}  // namespace cauchygeom

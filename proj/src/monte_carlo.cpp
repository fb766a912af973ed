#include "cauchygeom/monte_carlo.hpp"

#include <cmath>
#include <numbers>

#include "cauchygeom/errors.hpp"

namespace cauchygeom {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  SplitMix64 sm{seed};
  for (auto& s : s_) s = sm.next();
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

double Xoshiro256pp::next_unit_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double sample_cauchy(Xoshiro256pp& rng, const CauchyParam& p) {
  const double u = rng.next_unit_open();
  return p.location + p.scale * std::tan(kPi * (u - 0.5));
}

void McSpec::validate() const {
  if (sample_count < 1) throw ParamError("McSpec: sample_count must be >= 1");
}

McEstimate mc_kl(const CauchyMixtureFamily& fam, double theta,
                 const std::function<double(double)>& q_density, const McSpec& spec) {
  spec.validate();
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("mc_kl: theta must lie in [0,1]");
  Xoshiro256pp rng(spec.seed);
  const std::uint64_t n = spec.sample_count;
  // Welford accumulation: one pass, fixed order, stable
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const CauchyParam& comp = (rng.next_unit_open() < theta) ? fam.comp1() : fam.comp0();
    const double x = sample_cauchy(rng, comp);
    const double v = std::log(fam.pdf(theta, x)) - std::log(q_density(x));
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  McEstimate est;
  est.mean = mean;
  est.sample_count = n;
  est.std_error =
      (n > 1) ? std::sqrt(m2 / (static_cast<double>(n - 1) * static_cast<double>(n))) : 0.0;
  return est;
}

McEstimate mc_kl_between_mixtures(const CauchyMixtureFamily& fam, double theta1, double theta2,
                                  const McSpec& spec) {
  return mc_kl(
      fam, theta1, [&fam, theta2](double x) { return fam.pdf(theta2, x); }, spec);
}

}  // namespace cauchygeom

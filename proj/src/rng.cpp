#include "detrendcorr/rng.hpp"

#include <cmath>

namespace detrendcorr {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

std::uint64_t CounterRng::mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : base_(mix64(seed ^ mix64(kGamma * stream + 1))) {}

std::uint64_t CounterRng::at(std::uint64_t seed, std::uint64_t stream,
                             std::uint64_t counter) {
  const std::uint64_t base = mix64(seed ^ mix64(kGamma * stream + 1));
  return mix64(base + (counter + 1) * kGamma);
}

std::uint64_t CounterRng::next_u64() {
  return mix64(base_ + (++counter_) * kGamma);
}

double CounterRng::next_unit() {
  // 53-bit mantissa, offset by half an ulp so 0 and 1 are never produced.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = kTwoPi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Eigen::ArrayXd CounterRng::uniforms(Eigen::Index n) {
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = next_unit();
  return out;
}

Eigen::ArrayXd CounterRng::normals(Eigen::Index n) {
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = next_normal();
  return out;
}

}  // namespace detrendcorr

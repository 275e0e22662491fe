#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace detrendcorr {

/// Counter-based pseudo-random generator.
///
/// Word k of stream (seed, stream) is a pure integer function of the triple:
///   u64(k) = mix64(base + (k+1) * GAMMA),  base = mix64(seed ^ mix64(GAMMA * stream + 1))
/// with GAMMA = 0x9e3779b97f4a7c15 and mix64 the splitmix64 finalizer
/// (xorshift-multiply with 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb).
/// Integer-only arithmetic, so sequences are identical on every platform;
/// substreams let parallel column generation stay reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  static std::uint64_t mix64(std::uint64_t z);
  /// Word `counter` of stream (seed, stream), without touching any state.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t counter);

  std::uint64_t next_u64();
  double next_unit();     // uniform on (0, 1)
  double next_normal();   // standard normal (Box-Muller pair, cached spare)

  Eigen::ArrayXd uniforms(Eigen::Index n);
  Eigen::ArrayXd normals(Eigen::Index n);

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace detrendcorr

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace fourcirc {

/// xoshiro256** 1.0, seeded through splitmix64. Worker streams are derived with jump().
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;
  /// Raw state; must not be all zero.
  static Rng from_state(const std::array<std::uint64_t, 4>& state) noexcept {
    Rng r(0);
    r.s_ = state;
    return r;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;
  /// Uniform in [0, bound) without modulo bias; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;
  bool coin() noexcept { return ((*this)() >> 63) != 0; }

  /// Advances by 2^128 steps.
  void jump() noexcept;
  /// Copy of this generator jumped `index` times.
  [[nodiscard]] Rng stream(unsigned index) const noexcept;

  [[nodiscard]] const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace fourcirc

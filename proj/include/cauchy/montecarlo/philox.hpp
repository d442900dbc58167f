#pragma once

#include <array>
#include <cstdint>

namespace cauchy {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output is a
/// pure function of (key, counter), so any draw can be reproduced in isolation.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter ctr, Key key) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Seed for every randomized operation; all 64-bit values are valid.
struct Seed {
  std::uint64_t value = 0;
};

/// Random stream for one Monte Carlo sample: counter = (sample index, draw
/// block), key = seed. Successive calls walk the draw-block counter.
class SampleStream {
 public:
  SampleStream(Seed seed, std::uint64_t sample) noexcept
      : key_{static_cast<std::uint32_t>(seed.value), static_cast<std::uint32_t>(seed.value >> 32)},
        sample_(sample) {}

  /// Two uniform deviates in the open interval (0, 1), 53-bit resolution.
  std::array<double, 2> uniform_pair() noexcept {
    const auto out = Philox4x32::generate(
        {static_cast<std::uint32_t>(sample_), static_cast<std::uint32_t>(sample_ >> 32),
         static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32)},
        key_);
    ++block_;
    const std::uint64_t a = (std::uint64_t{out[0]} << 32) | out[1];
    const std::uint64_t b = (std::uint64_t{out[2]} << 32) | out[3];
    return {to_unit(a), to_unit(b)};
  }

 private:
  static double to_unit(std::uint64_t x) noexcept { return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53; }

  Philox4x32::Key key_;
  std::uint64_t sample_;
  std::uint64_t block_ = 0;
};

}  // namespace cauchy

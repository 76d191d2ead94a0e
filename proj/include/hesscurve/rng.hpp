#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace hesscurve {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11): a keyed
/// bijection on 128-bit counters. Stateless, so any (key, counter) pair can be
/// evaluated independently by any worker.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter ctr, Key key);
};

inline constexpr std::string_view kGeneratorId = "philox4x32-10";

/// Sequential draws from one Philox stream keyed on `seed`. The counter is
/// (index low, index high, block, stream); each block yields four words.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t index, std::uint32_t stream);

  std::uint32_t next_u32();
  /// Uniform integer in [lo, hi] by rejection; needs hi - lo < 2^32.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter ctr_;
  Philox4x32::Counter block_{};
  int used_ = 4;
};

}  // namespace hesscurve

#include "hesscurve/rng.hpp"

namespace hesscurve {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t index, std::uint32_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      ctr_{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0u, stream} {}

std::uint32_t CounterStream::next_u32() {
  if (used_ == 4) {
    block_ = Philox4x32::generate(ctr_, key_);
    ++ctr_[2];
    used_ = 0;
  }
  return block_[static_cast<std::size_t>(used_++)];
}

std::int64_t CounterStream::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  constexpr std::uint64_t kSpan = std::uint64_t{1} << 32;
  if (range == kSpan) return lo + next_u32();
  const std::uint64_t limit = kSpan - kSpan % range;
  std::uint64_t draw;
  do {
    draw = next_u32();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % range);
}

}  // namespace hesscurve

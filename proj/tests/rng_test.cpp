#include <doctest.h>

#include <map>
#include <set>

#include "hesscurve/rng.hpp"

using namespace hesscurve;

TEST_CASE("philox4x32-10 known answers") {
  using C = Philox4x32::Counter;
  using K = Philox4x32::Key;
  CHECK(Philox4x32::generate(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::generate(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are pure functions of seed, index and stream") {
  CounterStream a(42, 7, 0), b(42, 7, 0);
  for (int i = 0; i < 20; ++i) CHECK(a.next_u32() == b.next_u32());

  std::set<std::uint32_t> firsts;
  for (std::uint64_t seed : {1ULL, 2ULL, 1ULL << 40}) {
    for (std::uint64_t index : {0ULL, 1ULL, 1ULL << 33}) {
      for (std::uint32_t stream : {0u, 1u}) firsts.insert(CounterStream(seed, index, stream).next_u32());
    }
  }
  CHECK(firsts.size() == 18);
}

TEST_CASE("first block matches the raw generator") {
  const std::uint64_t seed = 0x0123456789abcdefULL, index = 0x0000000500000003ULL;
  CounterStream s(seed, index, 1);
  const auto block = Philox4x32::generate({0x00000003, 0x00000005, 0, 1}, {0x89abcdef, 0x01234567});
  for (std::uint32_t w : block) CHECK(s.next_u32() == w);
  const auto next = Philox4x32::generate({0x00000003, 0x00000005, 1, 1}, {0x89abcdef, 0x01234567});
  CHECK(s.next_u32() == next[0]);
}

TEST_CASE("uniform integers") {
  CounterStream s(9, 0, 0);
  std::map<std::int64_t, int> hist;
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const auto v = s.uniform_int(-3, 3);
    REQUIRE(v >= -3);
    REQUIRE(v <= 3);
    ++hist[v];
  }
  // chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile
  double chi2 = 0;
  for (const auto& [v, n] : hist) {
    const double e = draws / 7.0;
    chi2 += (n - e) * (n - e) / e;
  }
  CHECK(hist.size() == 7);
  CHECK(chi2 < 22.46);

  CounterStream t(9, 1, 0);
  for (int i = 0; i < 100; ++i) CHECK(t.uniform_int(5, 5) == 5);
  const auto big = t.uniform_int(-(std::int64_t(1) << 30), std::int64_t(1) << 30);
  CHECK(big >= -(std::int64_t(1) << 30));
}

// Counter-based pseudo-random generator: 10-round Philox-4x64 (Salmon,
// Moriarty, Phillips, Shaw 2011). A (key, counter) pair maps to four 64-bit
// output words through a fixed bijective mixing network, so the stream has
// random access: trial t can be generated without generating trials 0..t-1,
// and disjoint counter ranges can be filled in parallel with identical
// results. The key carries (seed, stream); the counter carries the trial
// index.

#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace biphoton {

class Philox4x64 {
  public:
    using Block = std::array<std::uint64_t, 4>;

    Philox4x64(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {}

    // The raw keyed bijection: full 256-bit counter in, four words out.
    static Block generate(Block counter, std::uint64_t key0, std::uint64_t key1) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key0 += kWeyl0;
                key1 += kWeyl1;
            }
            const auto [hi0, lo0] = mulhilo(kMultiplier0, counter[0]);
            const auto [hi1, lo1] = mulhilo(kMultiplier1, counter[2]);
            counter = {hi1 ^ counter[1] ^ key0, lo1, hi0 ^ counter[3] ^ key1, lo0};
        }
        return counter;
    }

    Block block(std::uint64_t counter0, std::uint64_t counter1 = 0) const {
        return generate({counter0, counter1, 0, 0}, seed_, stream_);
    }

    // Uniform double in [0, 1) with 53 random bits, from the block's first word.
    double uniform(std::uint64_t counter0) const {
        return static_cast<double>(block(counter0)[0] >> 11) * 0x1.0p-53;
    }

  private:
    static constexpr std::uint64_t kMultiplier0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMultiplier1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static std::pair<std::uint64_t, std::uint64_t> mulhilo(std::uint64_t a,
                                                           std::uint64_t b) {
        const auto product =
            static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
        return {static_cast<std::uint64_t>(product >> 64),
                static_cast<std::uint64_t>(product)};
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
};

}  // namespace biphoton

#pragma once

#include <bit>
#include <cstdint>
#include <limits>

namespace libnet
{
//---------------------------------------------------------------------------//
/*!
 * SplitMix64 finalizer (Steele, Lea & Flood 2014).
 */
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

//---------------------------------------------------------------------------//
/*!
 * xoshiro256** generator (Blackman & Vigna 2018), 256 bits of state.
 *
 * Streams are keyed by (seed, index):
 *   key   = mix64(mix64(seed) ^ mix64(index + golden))
 *   s[k]  = mix64(key + (k + 1) * golden),  k = 0..3
 * where golden = 0x9e3779b97f4a7c15. Distinct realization indices therefore
 * get unrelated states, and a realization is reproducible on its own
 * regardless of which thread draws it or in what order.
 *
 * Satisfies UniformRandomBitGenerator so it plugs into <random>
 * distributions.
 */
class Xoshiro256
{
  public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ull;

    constexpr Xoshiro256(std::uint64_t seed, std::uint64_t index)
    {
        std::uint64_t const key = mix64(mix64(seed) ^ mix64(index + golden));
        for (int k = 0; k < 4; ++k)
        {
            s_[k] = mix64(key + static_cast<std::uint64_t>(k + 1) * golden);
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max()
    {
        return std::numeric_limits<result_type>::max();
    }

    constexpr result_type operator()()
    {
        std::uint64_t const result = std::rotl(s_[1] * 5, 7) * 9;
        std::uint64_t const t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = std::rotl(s_[3], 45);
        return result;
    }

    //! Uniform double in [0, 1) with 53 random bits
    constexpr double uniform()
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t s_[4]{};
};

}  // namespace libnet

#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <string_view>

namespace lsdgen
{

/*! \brief splitmix64 step; used to seed xoshiro and to derive job seeds. */
constexpr std::uint64_t splitmix64( std::uint64_t& state )
{
  std::uint64_t z = ( state += 0x9E3779B97F4A7C15ull );
  z = ( z ^ ( z >> 30u ) ) * 0xBF58476D1CE4E5B9ull;
  z = ( z ^ ( z >> 27u ) ) * 0x94D049BB133111EBull;
  return z ^ ( z >> 31u );
}

/*! \brief xoshiro256** 1.0 (Blackman and Vigna), seeded through splitmix64.
 *
 * Output sequences are fixed for a given seed on every platform, which keeps
 * generated recipes and Monte-Carlo labels reproducible.
 */
class xoshiro256ss
{
public:
  using result_type = std::uint64_t;

  explicit xoshiro256ss( std::uint64_t seed )
  {
    std::uint64_t sm = seed;
    for ( auto& word : state_ )
      word = splitmix64( sm );
  }

  static constexpr result_type min() { return 0u; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()()
  {
    auto const result = std::rotl( state_[1] * 5u, 7 ) * 9u;
    auto const t = state_[1] << 17u;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl( state_[3], 45 );
    return result;
  }

private:
  std::uint64_t state_[4];
};

/*! \brief Deterministic 64-bit mixing of a seed with extra words and a string (FNV-1a + splitmix). */
inline std::uint64_t derive_seed( std::uint64_t master, std::string_view tag, std::uint64_t index )
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for ( char ch : tag )
  {
    h ^= static_cast<unsigned char>( ch );
    h *= 0x100000001b3ull;
  }
  std::uint64_t state = master ^ h;
  auto a = splitmix64( state );
  state ^= index;
  return a ^ splitmix64( state );
}

} // namespace lsdgen

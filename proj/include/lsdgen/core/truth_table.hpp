#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lsdgen
{

/* Projection words: bit j of var_mask[i] is bit i of j. */
inline constexpr std::uint64_t var_masks[6] = { 0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                                0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull };

/*! \brief Repeats the low 2^num_vars bits of `tt` across all 64 bits. */
constexpr std::uint64_t tile_truth_table( std::uint64_t tt, std::uint32_t num_vars )
{
  if ( num_vars >= 6u )
    return tt;
  std::uint32_t width = 1u << num_vars;
  tt &= ( width == 64u ) ? ~0ull : ( ( 1ull << width ) - 1u );
  while ( width < 64u )
  {
    tt |= tt << width;
    width <<= 1u;
  }
  return tt;
}

/*! \brief Mask of the meaningful bits of a k-variable table held in one word. */
constexpr std::uint64_t truth_table_mask( std::uint32_t num_vars )
{
  return num_vars >= 6u ? ~0ull : ( ( 1ull << ( 1u << num_vars ) ) - 1u );
}

constexpr bool tt_has_var( std::uint64_t tt, std::uint32_t var )
{
  std::uint32_t const shift = 1u << var;
  return ( ( tt >> shift ) & ~var_masks[var] ) != ( tt & ~var_masks[var] );
}

/*! \brief Evaluates a tiled table on the packed fanin words (bit-parallel Shannon expansion). */
std::uint64_t evaluate_truth_table( std::uint64_t tt, std::span<std::uint64_t const> inputs );

/*! \brief Re-expresses a table over `from` leaves as a table over the superset `to` (both sorted). */
std::uint64_t expand_truth_table( std::uint64_t tt, std::span<std::uint32_t const> from,
                                  std::span<std::uint32_t const> to );

std::string to_hex( std::uint64_t tt );
std::uint64_t from_hex( std::string const& text );

/*! \brief Truth table of up to 24 variables stored as packed 64-bit words.
 *
 * Tables of fewer than 6 variables are kept tiled in a single word.
 */
class dyn_truth_table
{
public:
  dyn_truth_table() = default;
  explicit dyn_truth_table( std::uint32_t num_vars );

  static dyn_truth_table nth_var( std::uint32_t num_vars, std::uint32_t var );

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t num_words() const { return words_.size(); }
  std::span<std::uint64_t const> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool get_bit( std::uint64_t index ) const { return ( words_[index >> 6u] >> ( index & 63u ) ) & 1u; }
  void set_bit( std::uint64_t index, bool value = true );

  bool is_const0() const;
  bool is_const1() const;
  bool has_var( std::uint32_t var ) const;
  std::uint64_t count_ones() const;

  dyn_truth_table cofactor0( std::uint32_t var ) const;
  dyn_truth_table cofactor1( std::uint32_t var ) const;

  dyn_truth_table operator~() const;
  dyn_truth_table operator&( dyn_truth_table const& other ) const;
  dyn_truth_table operator|( dyn_truth_table const& other ) const;
  dyn_truth_table operator^( dyn_truth_table const& other ) const;
  bool operator==( dyn_truth_table const& other ) const = default;

  std::size_t hash() const;

private:
  std::uint32_t num_vars_{ 0 };
  std::vector<std::uint64_t> words_{ 0 };
};

struct dyn_truth_table_hash
{
  std::size_t operator()( dyn_truth_table const& tt ) const { return tt.hash(); }
};

} // namespace lsdgen

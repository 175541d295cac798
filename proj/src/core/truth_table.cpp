#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/truth_table.hpp>

#include <algorithm>
#include <cstdio>

namespace lsdgen
{

namespace
{

std::uint64_t evaluate_rec( std::uint64_t tt, std::span<std::uint64_t const> inputs, std::uint32_t num_vars )
{
  if ( num_vars == 0u )
    return ( tt & 1u ) ? ~0ull : 0ull;
  std::uint32_t const half = 1u << ( num_vars - 1u );
  std::uint64_t const lo = tt & truth_table_mask( num_vars - 1u );
  std::uint64_t const hi = ( tt >> half ) & truth_table_mask( num_vars - 1u );
  if ( lo == hi )
    return evaluate_rec( lo, inputs, num_vars - 1u );
  if ( lo == 0u && hi == truth_table_mask( num_vars - 1u ) )
    return inputs[num_vars - 1u];
  if ( hi == 0u && lo == truth_table_mask( num_vars - 1u ) )
    return ~inputs[num_vars - 1u];
  auto const r0 = evaluate_rec( lo, inputs, num_vars - 1u );
  auto const r1 = evaluate_rec( hi, inputs, num_vars - 1u );
  auto const x = inputs[num_vars - 1u];
  return ( x & r1 ) | ( ~x & r0 );
}

} // namespace

std::uint64_t evaluate_truth_table( std::uint64_t tt, std::span<std::uint64_t const> inputs )
{
  assert( inputs.size() <= 6u );
  return evaluate_rec( tt & truth_table_mask( static_cast<std::uint32_t>( inputs.size() ) ), inputs,
                       static_cast<std::uint32_t>( inputs.size() ) );
}

std::uint64_t expand_truth_table( std::uint64_t tt, std::span<std::uint32_t const> from,
                                  std::span<std::uint32_t const> to )
{
  assert( to.size() <= 6u );
  std::uint32_t positions[6];
  for ( std::size_t i = 0; i < from.size(); ++i )
  {
    auto it = std::lower_bound( to.begin(), to.end(), from[i] );
    assert( it != to.end() && *it == from[i] );
    positions[i] = static_cast<std::uint32_t>( it - to.begin() );
  }
  std::uint64_t result = 0u;
  std::uint32_t const num_minterms = 1u << to.size();
  for ( std::uint32_t m = 0; m < num_minterms; ++m )
  {
    std::uint32_t index = 0u;
    for ( std::size_t i = 0; i < from.size(); ++i )
      index |= ( ( m >> positions[i] ) & 1u ) << i;
    if ( ( tt >> index ) & 1u )
      result |= 1ull << m;
  }
  return tile_truth_table( result, static_cast<std::uint32_t>( to.size() ) );
}

std::string to_hex( std::uint64_t tt )
{
  char buffer[17];
  std::snprintf( buffer, sizeof( buffer ), "%016llx", static_cast<unsigned long long>( tt ) );
  return buffer;
}

std::uint64_t from_hex( std::string const& text )
{
  std::string_view digits = text;
  if ( digits.starts_with( "0x" ) || digits.starts_with( "0X" ) )
    digits.remove_prefix( 2 );
  if ( digits.empty() || digits.size() > 16u )
    throw format_error( "malformed truth table '" + text + "'" );
  std::uint64_t value = 0u;
  for ( char ch : digits )
  {
    std::uint64_t nibble;
    if ( ch >= '0' && ch <= '9' )
      nibble = static_cast<std::uint64_t>( ch - '0' );
    else if ( ch >= 'a' && ch <= 'f' )
      nibble = static_cast<std::uint64_t>( ch - 'a' + 10 );
    else if ( ch >= 'A' && ch <= 'F' )
      nibble = static_cast<std::uint64_t>( ch - 'A' + 10 );
    else
      throw format_error( "malformed truth table '" + text + "'" );
    value = ( value << 4u ) | nibble;
  }
  return value;
}

/* dyn_truth_table */

dyn_truth_table::dyn_truth_table( std::uint32_t num_vars )
    : num_vars_( num_vars ), words_( num_vars <= 6u ? 1u : ( std::size_t{ 1 } << ( num_vars - 6u ) ), 0u )
{
  assert( num_vars <= 24u );
}

dyn_truth_table dyn_truth_table::nth_var( std::uint32_t num_vars, std::uint32_t var )
{
  dyn_truth_table tt( num_vars );
  if ( var < 6u )
  {
    std::fill( tt.words_.begin(), tt.words_.end(), var_masks[var] );
  }
  else
  {
    for ( std::size_t w = 0; w < tt.words_.size(); ++w )
      tt.words_[w] = ( ( w >> ( var - 6u ) ) & 1u ) ? ~0ull : 0ull;
  }
  return tt;
}

void dyn_truth_table::set_bit( std::uint64_t index, bool value )
{
  if ( value )
    words_[index >> 6u] |= 1ull << ( index & 63u );
  else
    words_[index >> 6u] &= ~( 1ull << ( index & 63u ) );
  if ( num_vars_ < 6u && value )
    words_[0] = tile_truth_table( words_[0], num_vars_ );
}

bool dyn_truth_table::is_const0() const
{
  return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0u; } );
}

bool dyn_truth_table::is_const1() const
{
  return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == ~0ull; } );
}

bool dyn_truth_table::has_var( std::uint32_t var ) const
{
  if ( var < 6u )
  {
    return std::any_of( words_.begin(), words_.end(), [var]( auto w ) { return tt_has_var( w, var ); } );
  }
  std::size_t const step = std::size_t{ 1 } << ( var - 6u );
  for ( std::size_t k = 0; k < words_.size(); k += 2u * step )
  {
    for ( std::size_t j = 0; j < step; ++j )
    {
      if ( words_[k + j] != words_[k + j + step] )
        return true;
    }
  }
  return false;
}

std::uint64_t dyn_truth_table::count_ones() const
{
  if ( num_vars_ < 6u )
    return static_cast<std::uint64_t>( std::popcount( words_[0] & truth_table_mask( num_vars_ ) ) );
  std::uint64_t total = 0u;
  for ( auto w : words_ )
    total += static_cast<std::uint64_t>( std::popcount( w ) );
  return total;
}

dyn_truth_table dyn_truth_table::cofactor0( std::uint32_t var ) const
{
  dyn_truth_table result = *this;
  if ( var < 6u )
  {
    std::uint32_t const shift = 1u << var;
    for ( auto& w : result.words_ )
      w = ( w & ~var_masks[var] ) | ( ( w & ~var_masks[var] ) << shift );
  }
  else
  {
    std::size_t const step = std::size_t{ 1 } << ( var - 6u );
    for ( std::size_t k = 0; k < words_.size(); k += 2u * step )
      for ( std::size_t j = 0; j < step; ++j )
        result.words_[k + j + step] = result.words_[k + j];
  }
  return result;
}

dyn_truth_table dyn_truth_table::cofactor1( std::uint32_t var ) const
{
  dyn_truth_table result = *this;
  if ( var < 6u )
  {
    std::uint32_t const shift = 1u << var;
    for ( auto& w : result.words_ )
      w = ( w & var_masks[var] ) | ( ( w & var_masks[var] ) >> shift );
  }
  else
  {
    std::size_t const step = std::size_t{ 1 } << ( var - 6u );
    for ( std::size_t k = 0; k < words_.size(); k += 2u * step )
      for ( std::size_t j = 0; j < step; ++j )
        result.words_[k + j] = result.words_[k + j + step];
  }
  return result;
}

dyn_truth_table dyn_truth_table::operator~() const
{
  dyn_truth_table result = *this;
  for ( auto& w : result.words_ )
    w = ~w;
  return result;
}

dyn_truth_table dyn_truth_table::operator&( dyn_truth_table const& other ) const
{
  assert( num_vars_ == other.num_vars_ );
  dyn_truth_table result = *this;
  for ( std::size_t i = 0; i < words_.size(); ++i )
    result.words_[i] &= other.words_[i];
  return result;
}

dyn_truth_table dyn_truth_table::operator|( dyn_truth_table const& other ) const
{
  assert( num_vars_ == other.num_vars_ );
  dyn_truth_table result = *this;
  for ( std::size_t i = 0; i < words_.size(); ++i )
    result.words_[i] |= other.words_[i];
  return result;
}

dyn_truth_table dyn_truth_table::operator^( dyn_truth_table const& other ) const
{
  assert( num_vars_ == other.num_vars_ );
  dyn_truth_table result = *this;
  for ( std::size_t i = 0; i < words_.size(); ++i )
    result.words_[i] ^= other.words_[i];
  return result;
}

std::size_t dyn_truth_table::hash() const
{
  std::size_t seed = num_vars_;
  for ( auto w : words_ )
    seed ^= std::hash<std::uint64_t>{}( w ) + 0x9e3779b97f4a7c15ull + ( seed << 6u ) + ( seed >> 2u );
  return seed;
}

} // namespace lsdgen

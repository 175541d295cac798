#include <lsdgen/core/errors.hpp>
#include <lsdgen/sim/random.hpp>
#include <lsdgen/sim/simulate.hpp>

#include <algorithm>
#include <bit>

namespace lsdgen
{

namespace
{

std::uint64_t exhaustive_word( std::size_t pi, std::size_t word )
{
  if ( pi < 6u )
    return var_masks[pi];
  return ( ( word >> ( pi - 6u ) ) & 1u ) ? ~0ull : 0ull;
}

/* words needed for 2^num_pis assignments; small PI counts still use one full (tiled) word */
std::size_t exhaustive_word_count( std::size_t num_pis )
{
  return num_pis <= 6u ? 1u : ( std::size_t{ 1 } << ( num_pis - 6u ) );
}

} // namespace

sim_vectors sim_vectors::random( std::size_t num_pis, std::size_t word_count, std::uint64_t seed )
{
  sim_vectors v;
  v.word_count = word_count;
  v.seed = seed;
  xoshiro256ss rng( seed );
  v.pi_words.assign( num_pis, std::vector<std::uint64_t>( word_count ) );
  for ( std::size_t w = 0; w < word_count; ++w )
    for ( std::size_t i = 0; i < num_pis; ++i )
      v.pi_words[i][w] = rng();
  return v;
}

sim_vectors sim_vectors::exhaustive( std::size_t num_pis )
{
  sim_vectors v;
  v.word_count = exhaustive_word_count( num_pis );
  v.pi_words.assign( num_pis, std::vector<std::uint64_t>( v.word_count ) );
  for ( std::size_t i = 0; i < num_pis; ++i )
    for ( std::size_t w = 0; w < v.word_count; ++w )
      v.pi_words[i][w] = exhaustive_word( i, w );
  return v;
}

std::uint64_t evaluate_node( node const& nd, std::span<std::uint64_t const> in )
{
  switch ( nd.gate )
  {
  case gate_type::const0:
    return 0u;
  case gate_type::const1:
    return ~0ull;
  case gate_type::pi:
    return 0u;
  case gate_type::po:
  case gate_type::buffer:
    return in[0];
  case gate_type::not_:
    return ~in[0];
  case gate_type::and2:
    return in[0] & in[1];
  case gate_type::nand2:
    return ~( in[0] & in[1] );
  case gate_type::or2:
    return in[0] | in[1];
  case gate_type::nor2:
    return ~( in[0] | in[1] );
  case gate_type::xor2:
    return in[0] ^ in[1];
  case gate_type::xnor2:
    return ~( in[0] ^ in[1] );
  case gate_type::maj3:
    return ( in[0] & in[1] ) | ( in[0] & in[2] ) | ( in[1] & in[2] );
  case gate_type::nand3:
    return ~( in[0] & in[1] & in[2] );
  case gate_type::nor3:
    return ~( in[0] | in[1] | in[2] );
  case gate_type::mux21:
    return ( in[2] & in[1] ) | ( ~in[2] & in[0] );
  case gate_type::nmux21:
    return ( in[2] & in[0] ) | ( ~in[2] & in[1] );
  case gate_type::aoi21:
    return ~( ( in[0] & in[1] ) | in[2] );
  case gate_type::oai21:
    return ~( ( in[0] | in[1] ) & in[2] );
  case gate_type::lut:
  case gate_type::cell:
    return evaluate_truth_table( nd.truth_table, in );
  }
  return 0u;
}

namespace
{

void simulate_into( circuit const& c, std::span<node_index const> order,
                    std::vector<std::vector<std::uint64_t>> const& pi_words, std::size_t first_word,
                    sim_result& result )
{
  auto const words = result.word_count();
  std::vector<std::size_t> pi_position( c.size(), 0u );
  for ( std::size_t i = 0; i < c.pis().size(); ++i )
    pi_position[c.pis()[i]] = i;

  std::uint64_t fanin_words[6];
  for ( auto n : order )
  {
    auto const& nd = c[n];
    auto out = result.mutable_words( n );
    if ( nd.gate == gate_type::pi )
    {
      auto const& src = pi_words[pi_position[n]];
      std::copy_n( src.begin() + static_cast<std::ptrdiff_t>( first_word ), words, out.begin() );
      continue;
    }
    if ( nd.fanins.size() > 6u )
      throw structural_error( "node " + std::to_string( n ) + " has more than 6 fanins" );
    for ( std::size_t w = 0; w < words; ++w )
    {
      for ( std::size_t k = 0; k < nd.fanins.size(); ++k )
        fanin_words[k] = result[nd.fanins[k]][w];
      out[w] = evaluate_node( nd, std::span<std::uint64_t const>( fanin_words, nd.fanins.size() ) );
    }
  }
}

} // namespace

sim_result simulate( circuit const& c, sim_vectors const& vectors )
{
  if ( vectors.pi_words.size() != c.num_pis() )
    throw usage_error( "simulation vectors cover " + std::to_string( vectors.pi_words.size() ) + " PIs, circuit has " +
                       std::to_string( c.num_pis() ) );
  for ( auto const& stream : vectors.pi_words )
    if ( stream.size() != vectors.word_count )
      throw usage_error( "simulation vectors have inconsistent word counts" );

  sim_result result( c.size(), vectors.word_count );
  auto const order = topo_order( c );
  simulate_into( c, order, vectors.pi_words, 0u, result );
  return result;
}

std::vector<bool> evaluate_assignment( circuit const& c, std::vector<bool> const& pi_values )
{
  if ( pi_values.size() != c.num_pis() )
    throw usage_error( "assignment size does not match PI count" );
  std::vector<bool> value( c.size(), false );
  for ( std::size_t i = 0; i < c.num_pis(); ++i )
    value[c.pis()[i]] = pi_values[i];

  for ( auto n : topo_order( c ) )
  {
    auto const& nd = c[n];
    if ( nd.gate == gate_type::pi )
      continue;
    std::uint32_t minterm = 0u;
    for ( std::size_t k = 0; k < nd.fanins.size(); ++k )
      minterm |= static_cast<std::uint32_t>( value[nd.fanins[k]] ) << k;
    value[n] = ( nd.truth_table >> minterm ) & 1u;
  }

  std::vector<bool> outputs;
  outputs.reserve( c.num_pos() );
  for ( auto po : c.pos() )
    outputs.push_back( value[po] );
  return outputs;
}

std::vector<dyn_truth_table> exhaustive_truth_tables( circuit const& c, std::uint32_t pi_limit )
{
  auto const num_pis = static_cast<std::uint32_t>( c.num_pis() );
  if ( num_pis > pi_limit )
    throw usage_error( "exhaustive simulation limited to " + std::to_string( pi_limit ) + " PIs, circuit has " +
                       std::to_string( num_pis ) );
  if ( num_pis > 24u )
    throw usage_error( "exhaustive simulation supports at most 24 PIs" );

  std::vector<dyn_truth_table> tables( c.num_pos(), dyn_truth_table( num_pis ) );
  auto const total_words = exhaustive_word_count( num_pis );
  std::size_t const block = std::min<std::size_t>( total_words, 256u );
  auto const order = topo_order( c );

  std::vector<std::vector<std::uint64_t>> pi_words( num_pis, std::vector<std::uint64_t>( block ) );
  sim_result result( c.size(), block );
  for ( std::size_t base = 0; base < total_words; base += block )
  {
    for ( std::size_t i = 0; i < num_pis; ++i )
      for ( std::size_t w = 0; w < block; ++w )
        pi_words[i][w] = exhaustive_word( i, base + w );
    simulate_into( c, order, pi_words, 0u, result );
    for ( std::size_t o = 0; o < c.num_pos(); ++o )
    {
      auto const words = result[c.pos()[o]];
      auto dest = tables[o].words();
      std::copy( words.begin(), words.end(), dest.begin() + static_cast<std::ptrdiff_t>( base ) );
    }
  }
  if ( num_pis < 6u )
    for ( auto& tt : tables )
      tt.words()[0] = tile_truth_table( tt.words()[0], num_pis );
  return tables;
}

std::vector<double> node_probability( circuit const& c, std::uint64_t vectors, std::uint64_t seed,
                                      std::uint32_t exhaustive_limit )
{
  if ( vectors == 0u )
    throw usage_error( "node_probability requires at least one vector" );

  auto const num_pis = c.num_pis();
  auto const order = topo_order( c );
  std::vector<std::uint64_t> ones( c.size(), 0u );
  std::uint64_t total = 0u;

  auto accumulate = [&]( sim_result const& result, std::size_t valid_words, std::uint64_t last_mask ) {
    for ( node_index n = 0; n < c.size(); ++n )
    {
      auto const words = result[n];
      for ( std::size_t w = 0; w + 1u < valid_words; ++w )
        ones[n] += static_cast<std::uint64_t>( std::popcount( words[w] ) );
      ones[n] += static_cast<std::uint64_t>( std::popcount( words[valid_words - 1u] & last_mask ) );
    }
  };

  if ( num_pis <= exhaustive_limit )
  {
    auto const total_words = exhaustive_word_count( num_pis );
    std::size_t const block = std::min<std::size_t>( total_words, 256u );
    std::vector<std::vector<std::uint64_t>> pi_words( num_pis, std::vector<std::uint64_t>( block ) );
    sim_result result( c.size(), block );
    auto const mask = truth_table_mask( static_cast<std::uint32_t>( std::min<std::size_t>( num_pis, 6u ) ) );
    for ( std::size_t base = 0; base < total_words; base += block )
    {
      for ( std::size_t i = 0; i < num_pis; ++i )
        for ( std::size_t w = 0; w < block; ++w )
          pi_words[i][w] = exhaustive_word( i, base + w );
      simulate_into( c, order, pi_words, 0u, result );
      accumulate( result, block, mask );
    }
    total = std::uint64_t{ 1 } << num_pis;
  }
  else
  {
    xoshiro256ss rng( seed );
    auto const total_words = ( vectors + 63u ) / 64u;
    std::size_t const block = static_cast<std::size_t>( std::min<std::uint64_t>( total_words, 256u ) );
    std::vector<std::vector<std::uint64_t>> pi_words( num_pis, std::vector<std::uint64_t>( block ) );
    sim_result result( c.size(), block );
    for ( std::uint64_t base = 0; base < total_words; base += block )
    {
      auto const words = static_cast<std::size_t>( std::min<std::uint64_t>( block, total_words - base ) );
      for ( std::size_t w = 0; w < block; ++w )
        for ( std::size_t i = 0; i < num_pis; ++i )
          pi_words[i][w] = w < words ? rng() : 0u;
      simulate_into( c, order, pi_words, 0u, result );
      auto const remaining = vectors - base * 64u;
      auto const last_mask = remaining >= static_cast<std::uint64_t>( words ) * 64u
                                 ? ~0ull
                                 : ( ( 1ull << ( remaining % 64u ) ) - 1u );
      accumulate( result, words, last_mask );
    }
    total = vectors;
  }

  std::vector<double> probability( c.size() );
  for ( node_index n = 0; n < c.size(); ++n )
    probability[n] = static_cast<double>( ones[n] ) / static_cast<double>( total );
  return probability;
}

std::vector<std::uint32_t> support( circuit const& c, node_index po )
{
  if ( po >= c.size() || c[po].gate != gate_type::po )
    throw usage_error( "node " + std::to_string( po ) + " is not a PO" );

  std::vector<std::uint32_t> pi_position( c.size(), 0u );
  for ( std::size_t i = 0; i < c.pis().size(); ++i )
    pi_position[c.pis()[i]] = static_cast<std::uint32_t>( i );

  std::vector<bool> visited( c.size(), false );
  std::vector<node_index> stack{ po };
  std::vector<std::uint32_t> result;
  visited[po] = true;
  while ( !stack.empty() )
  {
    auto const n = stack.back();
    stack.pop_back();
    if ( c[n].gate == gate_type::pi )
      result.push_back( pi_position[n] );
    for ( auto f : c[n].fanins )
    {
      if ( !visited[f] )
      {
        visited[f] = true;
        stack.push_back( f );
      }
    }
  }
  std::sort( result.begin(), result.end() );
  return result;
}

} // namespace lsdgen

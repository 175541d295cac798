#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/truth_table.hpp>
#include <lsdgen/sim/simulate.hpp>
#include <lsdgen/techmap/cuts.hpp>

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace lsdgen
{

std::uint64_t cut_function( circuit const& c, node_index root, std::vector<node_index> const& leaves )
{
  std::unordered_map<node_index, std::uint64_t> words;
  for ( std::size_t i = 0; i < leaves.size(); ++i )
    words.emplace( leaves[i], var_masks[i] );
  std::function<std::uint64_t( node_index )> eval = [&]( node_index n ) -> std::uint64_t {
    if ( auto it = words.find( n ); it != words.end() )
      return it->second;
    auto const& nd = c[n];
    if ( nd.gate == gate_type::pi )
      throw usage_error( "cut leaves do not separate node " + std::to_string( root ) + " from the inputs" );
    std::vector<std::uint64_t> in;
    in.reserve( nd.fanins.size() );
    for ( auto const f : nd.fanins )
      in.push_back( eval( f ) );
    auto const w = evaluate_node( nd, in );
    words.emplace( n, w );
    return w;
  };
  return tile_truth_table( eval( root ), static_cast<std::uint32_t>( leaves.size() ) );
}

cut shrink_to_support( cut const& ct )
{
  auto const k = static_cast<std::uint32_t>( ct.leaves.size() );
  std::vector<std::uint32_t> keep;
  for ( std::uint32_t v = 0; v < k; ++v )
    if ( tt_has_var( ct.function, v ) )
      keep.push_back( v );
  if ( keep.size() == k )
    return ct;
  cut out;
  out.depth = ct.depth;
  std::uint64_t f = 0;
  for ( std::uint32_t m = 0; m < ( 1u << keep.size() ); ++m )
  {
    std::uint32_t index = 0;
    for ( std::size_t i = 0; i < keep.size(); ++i )
      if ( ( m >> i ) & 1u )
        index |= 1u << keep[i];
    f |= ( ( ct.function >> index ) & 1u ) << m;
  }
  for ( auto const v : keep )
    out.leaves.push_back( ct.leaves[v] );
  out.function = tile_truth_table( f, static_cast<std::uint32_t>( keep.size() ) );
  return out;
}

namespace
{

bool is_subset( std::vector<node_index> const& a, std::vector<node_index> const& b )
{
  return std::includes( b.begin(), b.end(), a.begin(), a.end() );
}

} // namespace

std::vector<std::vector<cut>> enumerate_cuts( circuit const& c, std::uint32_t k, std::uint32_t limit )
{
  if ( k < 1u || k > 6u )
    throw usage_error( "cut size must be between 1 and 6, got " + std::to_string( k ) );
  if ( limit == 0u )
    throw usage_error( "cut limit must be positive" );

  std::vector<std::vector<cut>> cuts( c.size() );
  std::vector<std::uint32_t> est( c.size(), 0u );

  for ( auto const n : topo_order( c ) )
  {
    auto const& nd = c[n];
    switch ( nd.gate )
    {
    case gate_type::po:
      continue;
    case gate_type::pi:
      cuts[n].push_back( cut{ { n }, var_masks[0], 0u } );
      continue;
    case gate_type::const0:
    case gate_type::const1:
      cuts[n].push_back( cut{ {}, nd.gate == gate_type::const1 ? ~0ull : 0ull, 0u } );
      continue;
    default:
      break;
    }

    std::vector<std::vector<node_index>> partial{ {} };
    for ( auto const f : nd.fanins )
    {
      std::vector<std::vector<node_index>> next;
      for ( auto const& p : partial )
        for ( auto const& fc : cuts[f] )
        {
          std::vector<node_index> merged;
          std::set_union( p.begin(), p.end(), fc.leaves.begin(), fc.leaves.end(), std::back_inserter( merged ) );
          if ( merged.size() <= k )
            next.push_back( std::move( merged ) );
        }
      std::sort( next.begin(), next.end() );
      next.erase( std::unique( next.begin(), next.end() ), next.end() );
      partial = std::move( next );
    }

    std::vector<cut> found;
    for ( auto& leaves : partial )
    {
      std::uint32_t depth = 0;
      for ( auto const l : leaves )
        depth = std::max( depth, est[l] );
      found.push_back( cut{ std::move( leaves ), 0u, depth } );
    }
    std::stable_sort( found.begin(), found.end(), []( cut const& a, cut const& b ) {
      if ( a.depth != b.depth )
        return a.depth < b.depth;
      if ( a.leaves.size() != b.leaves.size() )
        return a.leaves.size() < b.leaves.size();
      return a.leaves < b.leaves;
    } );

    auto& kept = cuts[n];
    for ( auto& cand : found )
    {
      if ( kept.size() >= limit )
        break;
      bool dominated = false;
      for ( auto const& prev : kept )
        if ( is_subset( prev.leaves, cand.leaves ) )
        {
          dominated = true;
          break;
        }
      if ( dominated )
        continue;
      cand.function = cut_function( c, n, cand.leaves );
      kept.push_back( std::move( cand ) );
    }

    est[n] = ~0u;
    for ( auto const& ct : kept )
      est[n] = std::min( est[n], ct.depth + 1u );
    if ( kept.empty() )
      est[n] = 0u;
    kept.push_back( cut{ { n }, var_masks[0], est[n] } );
  }
  return cuts;
}

} // namespace lsdgen

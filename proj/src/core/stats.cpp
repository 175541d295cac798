#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/stats.hpp>

#include <algorithm>
#include <cmath>

namespace lsdgen
{

circuit_stats stats( circuit const& c )
{
  circuit_stats s;
  s.pis = c.num_pis();
  s.pos = c.num_pos();
  for ( auto const& nd : c.nodes() )
  {
    ++s.gate_counts[static_cast<std::size_t>( nd.gate )];
    s.edge_count += nd.fanins.size();
  }
  s.and2_count = s.count( gate_type::and2 );
  s.inverter_count = s.count( gate_type::not_ );

  auto const levels = compute_levels( c );
  for ( auto po : c.pos() )
    s.depth = std::max( s.depth, levels[po] );
  return s;
}

feature_vector compute_feature_vector( circuit const& c )
{
  auto const s = stats( c );
  return { static_cast<double>( s.pis ),           static_cast<double>( s.pos ),
           static_cast<double>( s.and2_count ),    static_cast<double>( s.inverter_count ),
           static_cast<double>( s.edge_count ),    static_cast<double>( s.depth ) };
}

double cosine_similarity( feature_vector const& a, feature_vector const& b )
{
  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    dot += a[i] * b[i];
    norm_a += a[i] * a[i];
    norm_b += b[i] * b[i];
  }
  if ( norm_a == 0.0 || norm_b == 0.0 )
    throw usage_error( "cosine similarity is undefined for a zero vector" );
  return std::clamp( dot / ( std::sqrt( norm_a ) * std::sqrt( norm_b ) ), -1.0, 1.0 );
}

ml_graph to_ml_graph( circuit const& c )
{
  ml_graph g;
  g.num_nodes = c.size();
  g.features.assign( g.num_nodes * ml_graph::feature_width, 0u );
  for ( auto const& nd : c.nodes() )
  {
    auto* row = &g.features[nd.index * ml_graph::feature_width];
    row[static_cast<std::size_t>( nd.gate )] = 1u;
    for ( std::size_t bit = 0; bit < 64u; ++bit )
      row[num_gate_types + bit] = static_cast<std::uint8_t>( ( nd.truth_table >> bit ) & 1u );
    for ( auto f : nd.fanins )
      g.edges.emplace_back( f, nd.index );
  }
  return g;
}

} // namespace lsdgen

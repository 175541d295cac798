#include <doctest.h>

#include <lsdgen/core/circuit.hpp>
#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/stats.hpp>
#include <lsdgen/core/truth_table.hpp>

#include "../support/test_circuits.hpp"

#include <algorithm>
#include <functional>

using namespace lsdgen;

namespace
{

/* independent oracle: evaluate a Boolean lambda on every 64-bit position,
 * where bit j assigns input i the value (j mod 2^k) >> i */
std::uint64_t enumerate_table( std::uint32_t k, std::function<bool( std::vector<bool> const& )> const& f )
{
  std::uint64_t tt = 0u;
  for ( std::uint32_t j = 0; j < 64u; ++j )
  {
    std::vector<bool> in( k );
    auto const m = k == 0u ? 0u : j % ( 1u << k );
    for ( std::uint32_t i = 0; i < k; ++i )
      in[i] = ( m >> i ) & 1u;
    if ( f( in ) )
      tt |= 1ull << j;
  }
  return tt;
}

} // namespace

TEST_CASE( "create_circuit yields an empty valid circuit" )
{
  for ( auto t : { logic_type::aig, logic_type::mig, logic_type::asic_netlist } )
  {
    auto const c = create_circuit( t, "t" );
    CHECK( c.size() == 0u );
    CHECK( c.num_pis() == 0u );
    CHECK( validate( c ).empty() );
    auto const s = stats( c );
    CHECK( s.depth == 0u );
    CHECK( s.edge_count == 0u );
  }
  CHECK( is_allowed( logic_type::asic_netlist, gate_type::cell ) );
  CHECK_FALSE( is_allowed( logic_type::asic_netlist, gate_type::and2 ) );
  CHECK( is_allowed( logic_type::asic_netlist, gate_type::buffer ) );
}

TEST_CASE( "add_node fills canonical truth tables" )
{
  circuit c( logic_type::gtg, "t" );
  auto const a = c.add_pi();
  auto const b = c.add_pi();
  auto const d = c.add_pi();
  auto const g = c.add_node( gate_type::and2, { a, b } );
  CHECK( g == 3u );
  CHECK( c[g].truth_table == 0x8888888888888888ull );
  CHECK( c[g].truth_table == enumerate_table( 2, []( auto const& x ) { return x[0] && x[1]; } ) );

  auto const n = c.add_node( gate_type::not_, { a } );
  CHECK( c[n].truth_table == 0x5555555555555555ull );

  auto const m = c.add_node( gate_type::maj3, { a, b, d } );
  CHECK( c[m].truth_table == 0xE8E8E8E8E8E8E8E8ull );
}

TEST_CASE( "canonical tables match the gate definitions" )
{
  using V = std::vector<bool>;
  struct entry
  {
    gate_type g;
    std::uint32_t k;
    std::function<bool( V const& )> f;
  };
  std::vector<entry> const entries = {
      { gate_type::nand2, 2, []( V const& x ) { return !( x[0] && x[1] ); } },
      { gate_type::or2, 2, []( V const& x ) { return x[0] || x[1]; } },
      { gate_type::nor2, 2, []( V const& x ) { return !( x[0] || x[1] ); } },
      { gate_type::xor2, 2, []( V const& x ) { return x[0] != x[1]; } },
      { gate_type::xnor2, 2, []( V const& x ) { return x[0] == x[1]; } },
      { gate_type::nand3, 3, []( V const& x ) { return !( x[0] && x[1] && x[2] ); } },
      { gate_type::nor3, 3, []( V const& x ) { return !( x[0] || x[1] || x[2] ); } },
      { gate_type::mux21, 3, []( V const& x ) { return x[2] ? x[1] : x[0]; } },
      { gate_type::nmux21, 3, []( V const& x ) { return x[2] ? x[0] : x[1]; } },
      { gate_type::aoi21, 3, []( V const& x ) { return !( ( x[0] && x[1] ) || x[2] ); } },
      { gate_type::oai21, 3, []( V const& x ) { return !( ( x[0] || x[1] ) && x[2] ); } },
      { gate_type::buffer, 1, []( V const& x ) { return x[0]; } },
      { gate_type::const1, 0, []( V const& ) { return true; } },
  };
  for ( auto const& e : entries )
  {
    CAPTURE( gate_name( e.g ) );
    auto const tt = canonical_truth_table( e.g );
    CHECK( tt == enumerate_table( e.k, e.f ) );
    /* tiling: bits j and j + 2^k agree */
    for ( std::uint32_t j = 0; j + ( 1u << e.k ) < 64u; ++j )
      CHECK( ( ( tt >> j ) & 1u ) == ( ( tt >> ( j + ( 1u << e.k ) ) ) & 1u ) );
  }
}

TEST_CASE( "constants are deduplicated and fanins must exist" )
{
  circuit c( logic_type::aig, "t" );
  auto const z0 = c.get_constant( false );
  CHECK( c.get_constant( false ) == z0 );
  CHECK( c.add_node( gate_type::const0, {} ) == z0 );
  CHECK( c.get_constant( true ) != z0 );
  CHECK_THROWS_AS( c.add_node( gate_type::not_, { 7u } ), structural_error );
}

TEST_CASE( "topo_order" )
{
  SUBCASE( "chain" )
  {
    circuit c( logic_type::aig, "t" );
    auto const a = c.add_pi();
    auto const n = c.add_node( gate_type::not_, { a } );
    auto const o = c.add_po( n );
    CHECK( topo_order( c ) == std::vector<node_index>{ a, n, o } );
  }
  SUBCASE( "diamond with two-phase wiring uses index tie-break" )
  {
    circuit c( logic_type::aig, "t" );
    auto const d = c.add_node( gate_type::and2, {} );
    auto const b = c.add_node( gate_type::not_, {} );
    auto const cc = c.add_node( gate_type::not_, {} );
    auto const a = c.add_pi();
    c.add_fanin( b, a );
    c.add_fanin( cc, a );
    c.add_fanin( d, b );
    c.add_fanin( d, cc );
    auto const order = topo_order( c );
    auto pos = [&]( node_index n ) { return std::find( order.begin(), order.end(), n ) - order.begin(); };
    CHECK( pos( a ) < pos( b ) );
    CHECK( pos( a ) < pos( cc ) );
    CHECK( pos( b ) < pos( cc ) );
    CHECK( pos( cc ) < pos( d ) );
    CHECK( validate( c ).empty() );
  }
  SUBCASE( "cycle" )
  {
    circuit c( logic_type::aig, "t" );
    auto const x = c.add_node( gate_type::not_, {} );
    auto const y = c.add_node( gate_type::not_, {} );
    c.add_fanin( x, y );
    c.add_fanin( y, x );
    CHECK_THROWS_AS( topo_order( c ), structural_error );
    CHECK_FALSE( validate( c ).empty() );
    CHECK_THROWS_AS( c.add_fanin( x, x ), structural_error );
  }
}

TEST_CASE( "validate reports gate-set and arity violations" )
{
  circuit c( logic_type::aig, "t" );
  auto const a = c.add_pi();
  auto const b = c.add_pi();
  c.add_node( gate_type::or2, { a, b } );
  auto v = validate( c );
  REQUIRE( v.size() == 1u );
  CHECK( v[0].find( "not allowed" ) != std::string::npos );

  circuit d( logic_type::aig, "t" );
  auto const x = d.add_pi();
  d.add_node( gate_type::and2, { x } );
  v = validate( d );
  REQUIRE( v.size() == 1u );
  CHECK( v[0].find( "fanins" ) != std::string::npos );

  circuit e( logic_type::aig, "t" );
  auto const y = e.add_pi();
  e.add_node( gate_type::not_, { y }, "bad", 0x1234u );
  CHECK( validate( e ).size() == 1u );
}

TEST_CASE( "stats and feature vector" )
{
  auto const c = test::and2_example();
  auto const s = stats( c );
  CHECK( s.pis == 2u );
  CHECK( s.pos == 1u );
  CHECK( s.and2_count == 1u );
  CHECK( s.inverter_count == 0u );
  CHECK( s.edge_count == 3u );
  CHECK( s.depth == 1u );
  CHECK( compute_feature_vector( c ) == feature_vector{ 2, 1, 1, 0, 3, 1 } );
  CHECK( compute_feature_vector( circuit( logic_type::aig, "e" ) ) == feature_vector{ 0, 0, 0, 0, 0, 0 } );

  /* 8-input balanced AND tree */
  circuit t( logic_type::aig, "tree" );
  std::vector<node_index> layer;
  for ( int i = 0; i < 8; ++i )
    layer.push_back( t.add_pi() );
  while ( layer.size() > 1u )
  {
    std::vector<node_index> next;
    for ( std::size_t i = 0; i < layer.size(); i += 2 )
      next.push_back( t.add_node( gate_type::and2, { layer[i], layer[i + 1] } ) );
    layer = next;
  }
  t.add_po( layer[0] );
  CHECK( stats( t ).depth == 3u );
  CHECK( stats( t ).and2_count == 7u );
}

TEST_CASE( "stats edge count invariant on random circuits" )
{
  for ( std::uint64_t seed = 1; seed <= 20; ++seed )
  {
    auto const c = test::random_aig( 6, 40, 3, seed );
    std::uint64_t edges = 0;
    for ( auto const& nd : c.nodes() )
      edges += nd.fanins.size();
    CHECK( stats( c ).edge_count == edges );
    CHECK( validate( c ).empty() );
    auto const order = topo_order( c );
    std::vector<std::size_t> pos( c.size() );
    for ( std::size_t i = 0; i < order.size(); ++i )
      pos[order[i]] = i;
    for ( auto const& nd : c.nodes() )
      for ( auto f : nd.fanins )
        CHECK( pos[f] < pos[nd.index] );
  }
}

TEST_CASE( "cosine similarity" )
{
  feature_vector const v{ 3, 1, 4, 1, 5, 9 };
  CHECK( cosine_similarity( v, v ) == doctest::Approx( 1.0 ).epsilon( 1e-12 ) );
  CHECK( cosine_similarity( { 1, 0, 0, 0, 0, 0 }, { 0, 1, 0, 0, 0, 0 } ) == 0.0 );
  CHECK( cosine_similarity( { 1, 2, 3, 4, 5, 6 }, { 6, 5, 4, 3, 2, 1 } ) == doctest::Approx( 56.0 / 91.0 ) );
  CHECK( cosine_similarity( { 1, 2, 3, 4, 5, 6 }, { 6, 5, 4, 3, 2, 1 } ) ==
         cosine_similarity( { 6, 5, 4, 3, 2, 1 }, { 1, 2, 3, 4, 5, 6 } ) );
  CHECK_THROWS_AS( cosine_similarity( { 0, 0, 0, 0, 0, 0 }, v ), usage_error );
}

TEST_CASE( "to_ml_graph keeps node indices" )
{
  auto c = test::and2_example();
  auto const g = to_ml_graph( c );
  CHECK( g.num_nodes == 4u );
  CHECK( g.edges == std::vector<std::pair<node_index, node_index>>{ { 0, 2 }, { 1, 2 }, { 2, 3 } } );
  CHECK( g.feature( 2, static_cast<std::size_t>( gate_type::and2 ) ) == 1u );
  CHECK( g.feature( 2, num_gate_types + 3 ) == 1u );
  CHECK( g.feature( 2, num_gate_types + 2 ) == 0u );

  /* names are not features */
  c.rename( 2, "something_else" );
  auto const g2 = to_ml_graph( c );
  CHECK( g2.features == g.features );
  CHECK( g2.edges == g.edges );

  /* the edge list plus gate rows regenerate the same skeleton */
  auto const r = test::random_aig( 5, 30, 2, 7 );
  auto const gr = to_ml_graph( r );
  circuit rebuilt( logic_type::aig, "rebuilt" );
  for ( std::size_t i = 0; i < gr.num_nodes; ++i )
  {
    std::size_t tag = 0;
    while ( gr.feature( i, tag ) == 0u )
      ++tag;
    rebuilt.add_node( static_cast<gate_type>( tag ), {} );
  }
  for ( auto [src, dst] : gr.edges )
    rebuilt.add_fanin( dst, src );
  CHECK( rebuilt.size() == r.size() );
  for ( node_index i = 0; i < r.size(); ++i )
  {
    CHECK( rebuilt[i].gate == r[i].gate );
    CHECK( rebuilt[i].fanins == r[i].fanins );
  }
  CHECK( gr.edges.size() == stats( r ).edge_count );
}

TEST_CASE( "truth table helpers" )
{
  CHECK( tile_truth_table( 0x8u, 2 ) == 0x8888888888888888ull );
  std::vector<std::uint32_t> from{ 3, 9 }, to{ 1, 3, 9 };
  /* AND over (3, 9) expressed over (1, 3, 9): minterms with bits 1 and 2 set */
  CHECK( expand_truth_table( 0x8u, from, to ) == tile_truth_table( 0xC0u, 3 ) );
  std::uint64_t in[3] = { 0b1100, 0b1010, 0b0110 };
  CHECK( evaluate_truth_table( canonical_truth_table( gate_type::maj3 ), in ) == 0b1110 );
  CHECK( from_hex( to_hex( 0xdeadbeef01234567ull ) ) == 0xdeadbeef01234567ull );

  auto const x7 = dyn_truth_table::nth_var( 8, 7 );
  auto const x0 = dyn_truth_table::nth_var( 8, 0 );
  auto const f = x7 & x0;
  CHECK( f.count_ones() == 64u );
  CHECK( f.has_var( 7 ) );
  CHECK_FALSE( f.has_var( 3 ) );
  CHECK( f.cofactor1( 7 ) == x0 );
  CHECK( f.cofactor0( 7 ).is_const0() );
}

#include <doctest.h>

#include <lsdgen/blast/blast.hpp>
#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/stats.hpp>
#include <lsdgen/opt/passes.hpp>
#include <lsdgen/sim/equivalence.hpp>
#include <lsdgen/sim/simulate.hpp>

#include "../support/test_circuits.hpp"

using namespace lsdgen;

namespace
{

std::array<logic_type, 6> const targets = { logic_type::aig,     logic_type::oig, logic_type::xag,
                                             logic_type::mig,     logic_type::primary, logic_type::gtg };

std::size_t count_gate( circuit const& c, gate_type g )
{
  return static_cast<std::size_t>(
      std::count_if( c.nodes().begin(), c.nodes().end(), [&]( node const& n ) { return n.gate == g; } ) );
}

std::size_t logic_nodes( circuit const& c )
{
  return static_cast<std::size_t>( std::count_if( c.nodes().begin(), c.nodes().end(), []( node const& n ) {
    return n.gate != gate_type::pi && n.gate != gate_type::po;
  } ) );
}

} // namespace

TEST_CASE( "single AND2 templates" )
{
  auto const a = test::and2_example();

  auto const mig = blast( a, logic_type::mig );
  REQUIRE( count_gate( mig, gate_type::maj3 ) == 1u );
  auto const& maj = *std::find_if( mig.nodes().begin(), mig.nodes().end(),
                                   []( node const& n ) { return n.gate == gate_type::maj3; } );
  CHECK( mig[maj.fanins[2]].gate == gate_type::const0 );

  auto const oig = blast( a, logic_type::oig );
  CHECK( count_gate( oig, gate_type::not_ ) == 3u );
  CHECK( count_gate( oig, gate_type::or2 ) == 1u );
  CHECK( logic_nodes( oig ) == 4u );

  auto const primary = blast( a, logic_type::primary );
  CHECK( count_gate( primary, gate_type::and2 ) == 1u );
  CHECK( logic_nodes( primary ) == 1u );

  CHECK_THROWS_AS( blast( a, logic_type::fpga_netlist ), usage_error );
  CHECK_THROWS_AS( blast( blast( a, logic_type::mig ), logic_type::aig ), usage_error );
}

TEST_CASE( "peephole patterns" )
{
  SUBCASE( "NAND2" )
  {
    circuit c( logic_type::primary, "p" );
    auto const a = c.add_pi();
    auto const b = c.add_pi();
    c.add_po( c.add_node( gate_type::not_, { c.add_node( gate_type::and2, { a, b } ) } ) );
    auto const m = peephole_merge( c, logic_type::primary );
    CHECK( logic_nodes( m ) == 1u );
    CHECK( count_gate( m, gate_type::nand2 ) == 1u );
    CHECK( check_equivalence( c, m ).holds() );
  }
  SUBCASE( "AOI21" )
  {
    circuit c( logic_type::gtg, "p" );
    auto const a = c.add_pi();
    auto const b = c.add_pi();
    auto const d = c.add_pi();
    auto const ab = c.add_node( gate_type::and2, { a, b } );
    c.add_po( c.add_node( gate_type::not_, { c.add_node( gate_type::or2, { ab, d } ) } ) );
    auto const m = peephole_merge( c, logic_type::gtg );
    CHECK( logic_nodes( m ) == 1u );
    REQUIRE( count_gate( m, gate_type::aoi21 ) == 1u );
    auto const& g = m[m[m.pos()[0]].fanins[0]];
    CHECK( g.fanins == std::vector<node_index>{ m.pis()[0], m.pis()[1], m.pis()[2] } );
    CHECK( check_equivalence( c, m ).result == equivalence_verdict::kind::equivalent );
  }
  SUBCASE( "shared interior node blocks the merge" )
  {
    circuit c( logic_type::primary, "p" );
    auto const a = c.add_pi();
    auto const b = c.add_pi();
    auto const g = c.add_node( gate_type::and2, { a, b } );
    c.add_po( c.add_node( gate_type::not_, { g } ) );
    c.add_po( g );
    auto const m = peephole_merge( c, logic_type::primary );
    CHECK( logic_nodes( m ) == logic_nodes( c ) );
    CHECK( count_gate( m, gate_type::nand2 ) == 0u );
  }
  SUBCASE( "illegal input" )
  {
    circuit c( logic_type::mig, "p" );
    auto const a = c.add_pi();
    c.add_po( c.add_node( gate_type::maj3, { a, a, a } ) );
    CHECK_THROWS_AS( peephole_merge( c, logic_type::primary ), usage_error );
    CHECK_THROWS_AS( peephole_merge( c, logic_type::oig ), usage_error );
  }
}

TEST_CASE( "blast preserves function and support" )
{
  for ( std::uint64_t seed = 1; seed <= 30; ++seed )
  {
    auto const a = strash( test::random_aig( 9, 200, 5, seed ) );
    for ( auto const t : targets )
    {
      CAPTURE( logic_type_name( t ) );
      auto const b = blast( a, t );
      CHECK( b.type() == t );
      CHECK( validate( b ).empty() );
      CHECK( b.num_pis() == a.num_pis() );
      CHECK( b.num_pos() == a.num_pos() );
      CHECK( check_equivalence( a, b ).result == equivalence_verdict::kind::equivalent );
      for ( std::size_t o = 0; o < a.num_pos(); ++o )
        CHECK( support( a, a.pos()[o] ) == support( b, b.pos()[o] ) );
      CHECK( blast( blast( a, logic_type::aig ), t ) == b );
      CHECK( blast( a, t ) == b );
    }
    auto const an = logic_nodes( a );
    CHECK( logic_nodes( blast( a, logic_type::oig ) ) <= 4u * an );
    CHECK( logic_nodes( blast( a, logic_type::mig ) ) <= an + 1u );
    auto const xr = blast( a, logic_type::xag, { true } );
    CHECK( validate( xr ).empty() );
    CHECK( check_equivalence( a, xr ).result == equivalence_verdict::kind::equivalent );
  }
}

TEST_CASE( "XOR recovery finds XOR2" )
{
  circuit c( logic_type::aig, "x" );
  auto const a = c.add_pi();
  auto const b = c.add_pi();
  auto const na = c.add_node( gate_type::not_, { a } );
  auto const nb = c.add_node( gate_type::not_, { b } );
  auto const t1 = c.add_node( gate_type::and2, { a, nb } );
  auto const t2 = c.add_node( gate_type::and2, { na, b } );
  auto const o = c.add_node( gate_type::and2, { c.add_node( gate_type::not_, { t1 } ), c.add_node( gate_type::not_, { t2 } ) } );
  c.add_po( c.add_node( gate_type::not_, { o } ) );
  auto const x = blast( c, logic_type::xag, { true } );
  CHECK( count_gate( x, gate_type::xor2 ) == 1u );
  CHECK( logic_nodes( x ) == 1u );
  CHECK( count_gate( blast( c, logic_type::xag ), gate_type::xor2 ) == 0u );
}

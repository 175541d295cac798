#include <doctest.h>

#include <lsdgen/core/errors.hpp>
#include <lsdgen/sim/equivalence.hpp>
#include <lsdgen/sim/random.hpp>
#include <lsdgen/sim/simulate.hpp>

#include "../support/test_circuits.hpp"

#include <cmath>

using namespace lsdgen;

namespace
{

std::vector<gate_type> const gtg_gates = { gate_type::not_,  gate_type::buffer, gate_type::and2,   gate_type::nand2,
                                           gate_type::or2,   gate_type::nor2,   gate_type::xor2,   gate_type::xnor2,
                                           gate_type::maj3,  gate_type::nand3,  gate_type::nor3,   gate_type::mux21,
                                           gate_type::nmux21, gate_type::aoi21, gate_type::oai21 };

} // namespace

TEST_CASE( "xoshiro256** reference stream" )
{
  /* state seeded directly through splitmix64 from 0 */
  std::uint64_t s = 0;
  auto const a = splitmix64( s );
  CHECK( a == 0xe220a8397b1dcdafull );
  xoshiro256ss r1( 42 ), r2( 42 ), r3( 43 );
  bool differs = false;
  for ( int i = 0; i < 10; ++i )
  {
    auto const x = r1();
    CHECK( x == r2() );
    differs |= x != r3();
  }
  CHECK( differs );
  CHECK( derive_seed( 1, "flow", 0 ) == derive_seed( 1, "flow", 0 ) );
  CHECK( derive_seed( 1, "flow", 0 ) != derive_seed( 1, "flow", 1 ) );
  CHECK( derive_seed( 1, "flow", 0 ) != derive_seed( 1, "verify", 0 ) );
}

TEST_CASE( "exhaustive vectors enumerate minterms" )
{
  auto const v = sim_vectors::exhaustive( 3 );
  REQUIRE( v.word_count == 1u );
  for ( std::uint32_t m = 0; m < 8u; ++m )
    for ( std::uint32_t i = 0; i < 3u; ++i )
      CHECK( ( ( v.pi_words[i][0] >> m ) & 1u ) == ( ( m >> i ) & 1u ) );
  auto const w = sim_vectors::exhaustive( 8 );
  CHECK( w.word_count == 4u );
  for ( std::uint32_t m = 0; m < 256u; ++m )
    CHECK( ( ( w.pi_words[7][m >> 6u] >> ( m & 63u ) ) & 1u ) == ( ( m >> 7u ) & 1u ) );
}

TEST_CASE( "packed simulation agrees with the naive evaluator" )
{
  for ( std::uint64_t seed = 1; seed <= 100; ++seed )
  {
    auto const c = seed % 2u ? test::random_aig( 7, 50, 4, seed )
                             : test::random_circuit( logic_type::gtg, gtg_gates, 7, 40, 4, seed );
    auto const vec = sim_vectors::random( c.num_pis(), 2, seed * 31u );
    auto const res = simulate( c, vec );
    for ( std::uint32_t bit = 0; bit < 128u; bit += 9u )
    {
      std::vector<bool> in( c.num_pis() );
      for ( std::size_t i = 0; i < in.size(); ++i )
        in[i] = ( vec.pi_words[i][bit >> 6u] >> ( bit & 63u ) ) & 1u;
      auto const out = evaluate_assignment( c, in );
      for ( std::size_t o = 0; o < c.num_pos(); ++o )
        CHECK( ( ( res[c.pos()[o]][bit >> 6u] >> ( bit & 63u ) ) & 1u ) == out[o] );
    }
  }
}

TEST_CASE( "LUT simulation" )
{
  for ( std::uint64_t seed = 1; seed <= 20; ++seed )
  {
    auto const c = test::random_circuit( logic_type::fpga_netlist, { gate_type::lut }, 8, 20, 3, seed );
    auto const tts = exhaustive_truth_tables( c );
    for ( std::uint32_t m = 0; m < 256u; m += 5u )
    {
      std::vector<bool> in( 8 );
      for ( std::uint32_t i = 0; i < 8u; ++i )
        in[i] = ( m >> i ) & 1u;
      auto const out = evaluate_assignment( c, in );
      for ( std::size_t o = 0; o < c.num_pos(); ++o )
        CHECK( tts[o].get_bit( m ) == out[o] );
    }
  }
}

TEST_CASE( "simulate rejects mismatched vectors" )
{
  auto const c = test::and2_example();
  CHECK_THROWS_AS( simulate( c, sim_vectors::exhaustive( 3 ) ), usage_error );
}

TEST_CASE( "node probability" )
{
  auto const c = test::and2_example();
  auto const p = node_probability( c );
  CHECK( p[0] == 0.5 );
  CHECK( p[2] == 0.25 );
  CHECK( p[3] == 0.25 );

  /* Monte-Carlo estimate within 0.02 of the exact value */
  for ( std::uint64_t seed = 1; seed <= 5; ++seed )
  {
    auto const r = test::random_aig( 10, 60, 3, seed );
    auto const exact = node_probability( r, 16384u, 1u, 14u );
    auto const est = node_probability( r, 16384u, seed, 0u );
    for ( std::size_t i = 0; i < r.size(); ++i )
      CHECK( std::abs( exact[i] - est[i] ) <= 0.02 );
  }
}

TEST_CASE( "support" )
{
  circuit c( logic_type::aig, "s" );
  auto const a = c.add_pi();
  auto const b = c.add_pi();
  auto const d = c.add_pi();
  auto const g = c.add_node( gate_type::and2, { a, d } );
  auto const o1 = c.add_po( g );
  auto const o2 = c.add_po( b );
  CHECK( support( c, o1 ) == std::vector<std::uint32_t>{ 0, 2 } );
  CHECK( support( c, o2 ) == std::vector<std::uint32_t>{ 1 } );
  CHECK_THROWS_AS( support( c, g ), usage_error );
}

TEST_CASE( "equivalence" )
{
  auto make = []( gate_type g ) {
    circuit c( logic_type::gtg, "e" );
    auto const a = c.add_pi();
    auto const b = c.add_pi();
    c.add_po( c.add_node( g, { a, b } ) );
    return c;
  };
  auto const and2 = make( gate_type::and2 );
  auto const or2 = make( gate_type::or2 );

  auto const same = check_equivalence( and2, and2 );
  CHECK( same.result == equivalence_verdict::kind::equivalent );
  CHECK( same.tier() == "equivalent" );

  auto const diff = check_equivalence( and2, or2 );
  REQUIRE( diff.result == equivalence_verdict::kind::not_equivalent );
  /* lowest differing minterm is m = 1: PI0 = 1, PI1 = 0 */
  CHECK( diff.counterexample == std::vector<bool>{ true, false } );
  CHECK( evaluate_assignment( and2, diff.counterexample ) != evaluate_assignment( or2, diff.counterexample ) );

  circuit three( logic_type::gtg, "x" );
  three.add_pi();
  CHECK_THROWS_AS( check_equivalence( and2, three ), usage_error );

  /* random mode above the exhaustive limit */
  auto const big = test::random_aig( 20, 120, 3, 5 );
  auto const v = check_equivalence( big, big, { 64u, 16u, 1u } );
  CHECK( v.result == equivalence_verdict::kind::not_falsified );
  CHECK( v.vectors == 64u * 64u );

  /* a perturbed copy is caught and the counterexample replays */
  for ( std::uint64_t seed = 1; seed <= 10; ++seed )
  {
    auto const x = test::random_aig( 20, 80, 2, seed );
    circuit y( x.type(), x.name() );
    for ( auto const& nd : x.nodes() )
    {
      if ( nd.gate == gate_type::po && y.num_pos() == 0u )
        y.add_node( gate_type::po, { y.add_node( gate_type::not_, { nd.fanins[0] } ) } );
      else
        y.add_node( nd.gate, nd.fanins, nd.name );
    }
    auto const r = check_equivalence( x, y );
    REQUIRE( r.result == equivalence_verdict::kind::not_equivalent );
    CHECK( evaluate_assignment( x, r.counterexample ) != evaluate_assignment( y, r.counterexample ) );
  }
}

#include <doctest.h>

#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/stats.hpp>
#include <lsdgen/io/aiger.hpp>
#include <lsdgen/io/circuit_file.hpp>
#include <lsdgen/io/graphml.hpp>
#include <lsdgen/io/qor.hpp>
#include <lsdgen/io/recipe_io.hpp>
#include <lsdgen/io/verilog.hpp>
#include <lsdgen/sim/equivalence.hpp>
#include <lsdgen/sim/simulate.hpp>

#include "../support/test_circuits.hpp"

#include <filesystem>
#include <sstream>

using namespace lsdgen;

namespace
{

std::vector<gate_type> const gtg_gates = { gate_type::not_, gate_type::and2,  gate_type::nand2,  gate_type::or2,
                                           gate_type::nor2, gate_type::xor2,  gate_type::xnor2,  gate_type::maj3,
                                           gate_type::nand3, gate_type::nor3, gate_type::mux21, gate_type::nmux21,
                                           gate_type::aoi21, gate_type::oai21, gate_type::buffer };

bool same_function( circuit const& a, circuit const& b )
{
  return exhaustive_truth_tables( a ) == exhaustive_truth_tables( b );
}

} // namespace

TEST_CASE( "GraphML round trip is lossless and byte stable" )
{
  for ( std::uint64_t seed = 1; seed <= 20; ++seed )
  {
    auto c = seed % 3u == 0u ? test::random_circuit( logic_type::fpga_netlist, { gate_type::lut }, 6, 20, 3, seed )
                             : test::random_circuit( logic_type::gtg, gtg_gates, 6, 40, 3, seed );
    c.set_origin_index( 7, 3 );
    c.rename( 8, "a<b>&\"c\"" );
    auto const text = write_graphml( c );
    auto const back = read_graphml_string( text );
    CHECK( back == c );
    CHECK( write_graphml( back ) == text );
  }
}

TEST_CASE( "GraphML errors" )
{
  auto const text = write_graphml( test::and2_example() );
  auto broken = text;
  auto const pos = broken.find( "<data key=\"slot\">" );
  REQUIRE( pos != std::string::npos );
  broken.erase( pos, broken.find( "</data>", pos ) + 7u - pos );
  CHECK_THROWS_AS( read_graphml_string( broken ), format_error );

  auto unknown = text;
  auto const p2 = unknown.find( ">AND2<" );
  REQUIRE( p2 != std::string::npos );
  unknown.replace( p2, 6, ">FOO9<" );
  CHECK_THROWS_AS( read_graphml_string( unknown ), format_error );

  CHECK_THROWS_AS( read_graphml_string( "<graphml><graph" ), format_error );
}

TEST_CASE( "AIGER reader" )
{
  std::istringstream in( "aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n" );
  auto const c = read_aiger( in, "t" );
  auto const s = stats( c );
  CHECK( s.pis == 2u );
  CHECK( s.pos == 1u );
  CHECK( s.and2_count == 1u );
  CHECK( s.depth == 1u );
  CHECK( same_function( c, test::and2_example() ) );

  std::istringstream latch( "aag 1 0 1 0 0\n2 3\n" );
  CHECK_THROWS_AS( read_aiger( latch ), format_error );
  std::istringstream range( "aag 1 1 0 1 0\n2\n9\n" );
  CHECK_THROWS_AS( read_aiger( range ), format_error );

  /* complemented output and constant */
  std::istringstream neg( "aag 3 2 0 2 1\n2\n4\n7\n1\n6 3 5\n" );
  auto const n = read_aiger( neg );
  auto const tts = exhaustive_truth_tables( n );
  CHECK( tts[0].words()[0] == 0xEEEEEEEEEEEEEEEEull ); /* ~(~a & ~b) = a | b */
  CHECK( tts[1].is_const1() );
}

TEST_CASE( "AIGER round trip in both encodings" )
{
  for ( std::uint64_t seed = 1; seed <= 20; ++seed )
  {
    auto const c = test::random_aig( 8, 60, 4, seed );
    for ( bool ascii : { true, false } )
    {
      std::stringstream buf;
      write_aiger( c, buf, ascii );
      auto const back = read_aiger( buf );
      CHECK( same_function( c, back ) );
      CHECK( stats( back ).and2_count <= stats( c ).and2_count );
      std::stringstream again;
      write_aiger( back, again, ascii );
      CHECK( again.str() == buf.str() );
    }
  }
  std::stringstream sink;
  CHECK_THROWS_AS( write_aiger( test::random_circuit( logic_type::gtg, gtg_gates, 3, 5, 1, 1 ), sink, true ),
                   usage_error );
}

TEST_CASE( "Verilog round trip" )
{
  for ( std::uint64_t seed = 1; seed <= 20; ++seed )
  {
    auto const c = seed % 4u == 0u ? test::random_circuit( logic_type::fpga_netlist, { gate_type::lut }, 6, 15, 3, seed )
                                   : test::random_circuit( logic_type::gtg, gtg_gates, 6, 40, 3, seed );
    auto const text = write_verilog( c );
    auto const back = read_verilog_string( text );
    CHECK( back.type() == c.type() );
    CHECK( back.num_pis() == c.num_pis() );
    CHECK( back.num_pos() == c.num_pos() );
    CHECK( same_function( c, back ) );
    CHECK( write_verilog( back ) == text );
  }
}

TEST_CASE( "Verilog reader accepts plain structural input" )
{
  auto const c = read_verilog_string( R"(
module add1 (a, b, cin, s, cout);
  input a, b, cin;
  output s, cout;
  wire t;
  assign t = a ^ b;
  assign s = t ^ cin;
  assign cout = (a & b) | (t & cin);
endmodule
)" );
  CHECK( c.num_pis() == 3u );
  CHECK( c.num_pos() == 2u );
  auto const tts = exhaustive_truth_tables( c );
  CHECK( ( tts[0].words()[0] & 0xFFu ) == 0x96u );
  CHECK( ( tts[1].words()[0] & 0xFFu ) == 0xE8u );
  CHECK( validate( c ).empty() );
}

TEST_CASE( "Verilog reader rejects behavioural code" )
{
  auto const text = R"(module m (a, y);
  input a;
  output y;
  reg y;
  always @(a) y = a;
endmodule
)";
  try
  {
    read_verilog_string( text );
    FAIL( "expected format_error" );
  }
  catch ( format_error const& e )
  {
    CHECK( std::string( e.what() ).find( "line" ) != std::string::npos );
  }
  CHECK_THROWS_AS( read_verilog_string( "module m (y); output y; assign y = y; endmodule" ), std::runtime_error );
  CHECK_THROWS_AS( read_verilog_string( "module m (a, y); input a; output y; wire z; assign y = z; endmodule" ),
                   std::runtime_error );
}

TEST_CASE( "QoR records" )
{
  qor_record const q{ 12.25, 3.5, 9, 4, backend::asic };
  auto const text = write_qor( q );
  CHECK( text == "{\"area\": 12.25, \"arrival\": 3.5, \"gate_count\": 9, \"depth\": 4, \"backend\": \"asic\"}\n" );
  CHECK( read_qor_string( text ) == q );
  qor_record const odd{ 0.1 + 0.2, 1.0 / 3.0, 1, 1, backend::fpga };
  CHECK( read_qor_string( write_qor( odd ) ) == odd );

  CHECK_THROWS_AS( read_qor_string( "{\"area\": -1, \"arrival\": 0, \"gate_count\": 1, \"depth\": 1, "
                                    "\"backend\": \"asic\"}" ),
                   format_error );
  CHECK_THROWS_AS( read_qor_string( "{\"area\": 1}" ), format_error );
  CHECK_THROWS_AS( read_qor_string( "not json" ), format_error );
  auto const fpga = read_qor_string( "{\"area\": 5, \"gate_count\": 5, \"depth\": 2, \"backend\": \"fpga\"}" );
  CHECK( fpga.arrival == 2.0 );
  CHECK( fpga.backend == backend::fpga );
}

TEST_CASE( "recipe files" )
{
  recipe const r{ 3, { parse_command( "balance" ), parse_command( "rewrite -l -z" ), parse_command( "resub -z" ) } };
  auto const text = write_recipe( r );
  CHECK( text == "balance\nrewrite -l -z\nresub -z\n" );
  CHECK( read_recipe_string( text, 3 ) == r );
  CHECK( read_recipe_string( "# comment\n\nbalance\n" ).commands.size() == 1u );
  CHECK_THROWS_AS( read_recipe_string( "balance\nbalance -z\n" ), format_error );
  CHECK_THROWS_AS( parse_command( "rewrite -z -l" ), format_error );
  CHECK_THROWS_AS( parse_command( "strash" ), format_error );
  for ( auto const& cmd : command_pool() )
    CHECK( parse_command( cmd.to_string() ) == cmd );
}

TEST_CASE( "file helpers dispatch on extension" )
{
  auto const dir = std::filesystem::temp_directory_path() / "lsdgen_test_io";
  std::filesystem::remove_all( dir );
  auto const c = test::random_aig( 5, 20, 2, 3 );
  for ( auto ext : { ".graphml", ".aag", ".aig", ".v" } )
  {
    auto const path = dir / "sub" / ( std::string( "c" ) + ext );
    save_circuit( c, path );
    CHECK( same_function( load_circuit( path ), c ) );
  }
  CHECK_THROWS_AS( load_circuit( dir / "c.blif" ), usage_error );
  std::filesystem::remove_all( dir );
}

#include <doctest.h>

#include <lsdgen/io/aiger.hpp>
#include <lsdgen/io/circuit_file.hpp>
#include <lsdgen/io/graphml.hpp>
#include <lsdgen/io/qor.hpp>
#include <lsdgen/io/recipe_io.hpp>
#include <lsdgen/io/verilog.hpp>
#include <lsdgen/pipeline/archive.hpp>
#include <lsdgen/pipeline/extract.hpp>
#include <lsdgen/pipeline/flow.hpp>
#include <lsdgen/techmap/mapper.hpp>
#include <lsdgen/techmap/sta.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace fs = std::filesystem;
using namespace lsdgen;

namespace
{

fs::path const formats = fs::path( LSDGEN_SOURCE_DIR ) / "docs" / "formats";

/* compares with the stored file; LSDGEN_UPDATE_GOLDEN=1 rewrites it instead */
void golden( std::string const& file, std::string const& content )
{
  auto const path = formats / file;
  if ( auto const* env = std::getenv( "LSDGEN_UPDATE_GOLDEN" ); env && std::string( env ) == "1" )
    write_file( path, content );
  REQUIRE_MESSAGE( fs::exists( path ), file );
  CHECK_MESSAGE( read_file( path ) == content, file );
}

} // namespace

TEST_CASE( "golden files for every exchange format" )
{
  ::unsetenv( "SOURCE_DATE_EPOCH" );
  auto const source = load_circuit( formats / "full_adder.v" );
  auto const aig = to_aig( to_gtg( source ) );
  golden( "full_adder.graphml", write_graphml( aig ) );
  std::ostringstream aag;
  write_aiger( aig, aag, true );
  golden( "full_adder.aag", aag.str() );

  auto const lib = mini_library();
  auto const asic = map_asic( aig, lib );
  golden( "full_adder.asic.v", write_verilog( asic ) );
  golden( "full_adder.asic_qor.json", write_qor( sta( asic, lib ) ) );
  golden( "full_adder.fpga_qor.json", write_qor( fpga_qor( map_lut( aig, 6u ) ) ) );
  golden( "recipe.txt", write_recipe( gen_recipes( 1u, 10u, 1u )[0] ) );

  flow_config cfg;
  cfg.recipes = 1u;
  auto const item = run_flow( formats / "full_adder.v", cfg );
  golden( "manifest.json", manifest_text( item ) );
  golden( "replay.txt", item.groups[group_index( logic_type::mig )][0].replay );
  std::ostringstream ranking;
  write_jsonl( extract_ranking( { item } ), ranking );
  golden( "ranking.jsonl", ranking.str() );
  std::ostringstream qor;
  write_jsonl( extract_qor( { item } ), qor );
  golden( "qor.jsonl", qor.str() );

  /* stored files parse back into the same objects */
  CHECK( read_graphml_string( read_file( formats / "full_adder.graphml" ) ) == aig );
  CHECK( read_verilog_string( read_file( formats / "full_adder.asic.v" ) ) == asic );
  CHECK( load_library( ( fs::path( LSDGEN_SOURCE_DIR ) / "data" / "mini_lib.json" ).string() ) == lib );
}

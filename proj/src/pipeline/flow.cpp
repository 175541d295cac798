#include <lsdgen/blast/blast.hpp>
#include <lsdgen/core/decompose.hpp>
#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/stats.hpp>
#include <lsdgen/io/circuit_file.hpp>
#include <lsdgen/io/graphml.hpp>
#include <lsdgen/pipeline/archive.hpp>
#include <lsdgen/pipeline/flow.hpp>
#include <lsdgen/sim/random.hpp>
#include <lsdgen/techmap/sta.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace lsdgen
{

circuit to_gtg( circuit const& c )
{
  return decompose_to_gtg( c );
}

circuit to_aig( circuit const& c )
{
  return strash( decompose_to_aig( c ) );
}

std::vector<recipe> gen_recipes( std::uint32_t n, std::uint32_t length, std::uint64_t seed )
{
  if ( length == 0u && n > 1u )
    throw usage_error( "only one distinct empty recipe exists" );
  /* balance occupies four pool slots, so 13 distinct commands */
  std::uint64_t space = 1u;
  for ( std::uint32_t i = 0; i < length && space <= n; ++i )
    space *= 13u;
  if ( n > space )
    throw usage_error( "cannot draw " + std::to_string( n ) + " distinct recipes of length " + std::to_string( length ) );

  auto const& pool = command_pool();
  xoshiro256ss rng( seed );
  std::set<std::vector<std::string>> seen;
  std::vector<recipe> result;
  while ( result.size() < n )
  {
    recipe r;
    r.id = static_cast<std::uint32_t>( result.size() );
    std::vector<std::string> key;
    for ( std::uint32_t i = 0; i < length; ++i )
    {
      r.commands.push_back( pool[rng() >> 60u] );
      key.push_back( r.commands.back().to_string() );
    }
    if ( seen.insert( std::move( key ) ).second )
      result.push_back( std::move( r ) );
  }
  return result;
}

std::size_t group_index( logic_type t )
{
  auto const it = std::find( network_types.begin(), network_types.end(), t );
  if ( it == network_types.end() )
    throw usage_error( "not a network kind: " + std::string( logic_type_name( t ) ) );
  return static_cast<std::size_t>( it - network_types.begin() );
}

std::string creation_timestamp()
{
  std::time_t t = 0;
  if ( auto const* env = std::getenv( "SOURCE_DATE_EPOCH" ); env && *env )
  {
    try
    {
      t = static_cast<std::time_t>( std::stoll( env ) );
    }
    catch ( std::exception const& )
    {
      throw usage_error( std::string( "SOURCE_DATE_EPOCH is not an integer: " ) + env );
    }
  }
  std::tm tm{};
  gmtime_r( &t, &tm );
  char buffer[32];
  std::strftime( buffer, sizeof( buffer ), "%Y-%m-%dT%H:%M:%SZ", &tm );
  return buffer;
}

std::uint32_t resolve_jobs( std::optional<std::uint32_t> flag )
{
  if ( flag )
    return std::max( 1u, *flag );
  if ( auto const* env = std::getenv( "LSDGEN_JOBS" ); env && *env )
  {
    try
    {
      return static_cast<std::uint32_t>( std::max( 1l, std::stol( env ) ) );
    }
    catch ( std::exception const& )
    {
      throw usage_error( std::string( "LSDGEN_JOBS is not an integer: " ) + env );
    }
  }
  return 1u;
}

namespace
{

std::string describe( std::vector<bool> const& cex, circuit const& c )
{
  std::string s;
  for ( std::size_t i = 0; i < cex.size(); ++i )
    s += ( i ? " " : "" ) + c[c.pis()[i]].name + "=" + ( cex[i] ? "1" : "0" );
  return s;
}

std::string verify( circuit const& a, circuit const& b, equivalence_options const& opts, std::string const& what,
                    std::string const& replay )
{
  auto const v = check_equivalence( a, b, opts );
  if ( !v.holds() )
    throw verification_error( what + " is not equivalent to its reference; counterexample: " +
                              describe( v.counterexample, a ) + "; replay with: " + replay );
  return v.tier();
}

std::string replay_script( design_item const& item, std::uint32_t r, logic_type t, flow_config const& cfg )
{
  auto const g = group_name( t );
  auto tag = "work/" + artifact_stem( t, r );
  std::replace( tag.begin() + 5, tag.end(), '/', '.' );
  std::ostringstream s;
  s << "# replay of design " << item.name << ", recipe " << r << ", logic type " << g
    << "; run from the design directory\n";
  s << "lsdgen optimize raw/base_aig.graphml --recipe " << recipe_path( r ) << " --out " << tag << ".opt.graphml\n";
  s << "lsdgen blast " << tag << ".opt.graphml --type " << g << " --out " << tag << ".network.graphml\n";
  s << "lsdgen verify raw/base_aig.graphml " << tag << ".network.graphml\n";
  s << "lsdgen map-asic " << tag << ".network.graphml --lib raw/library.json --mode "
    << ( cfg.asic == asic_mode::area ? "area" : "delay" ) << " --out " << tag << ".asic.graphml\n";
  s << "lsdgen map-fpga " << tag << ".network.graphml --lut-k " << cfg.lut_k << " --mode "
    << ( cfg.lut == lut_mode::area ? "area" : "depth" ) << " --out " << tag << ".fpga.graphml\n";
  s << "lsdgen verify " << tag << ".network.graphml " << tag << ".asic.graphml\n";
  s << "lsdgen verify " << tag << ".network.graphml " << tag << ".fpga.graphml\n";
  s << "lsdgen sta " << tag << ".asic.graphml --lib raw/library.json --out " << tag << ".asic_qor.json\n";
  s << "lsdgen sta " << tag << ".fpga.graphml --out " << tag << ".fpga_qor.json\n";
  return s.str();
}

std::string sanitize( std::string name )
{
  for ( auto& ch : name )
    if ( !std::isalnum( static_cast<unsigned char>( ch ) ) && ch != '_' && ch != '-' && ch != '.' )
      ch = '_';
  if ( name.empty() || name == "." || name == ".." )
    name = "design";
  return name;
}

design_item run_items( circuit const& source, std::string const& name, std::string source_file, std::string source_text,
                       flow_config const& config )
{
  auto const lib = config.library ? *config.library : mini_library();

  design_item item;
  item.name = sanitize( name );
  item.source_file = std::move( source_file );
  item.source_text = std::move( source_text );
  item.seed = config.seed;
  item.length = config.length;
  item.lut_k = config.lut_k;
  item.library_text = write_library( lib );
  item.created = creation_timestamp();

  auto raw_opts = config.verify;
  raw_opts.seed = derive_seed( config.seed, item.name, ~0ull );
  item.gtg = to_gtg( source );
  item.gtg.set_name( item.name );
  ensure_valid( item.gtg );
  item.gtg_verdict = verify( source, item.gtg, raw_opts, item.name + " raw/gtg", "lsdgen synth-gtg raw/" + item.source_file );
  item.base_aig = to_aig( item.gtg );
  item.base_aig.set_name( item.name );
  item.base_verdict = verify( item.gtg, item.base_aig, raw_opts, item.name + " raw/base_aig", "lsdgen to-aig raw/gtg.graphml" );

  item.recipes = gen_recipes( config.recipes, config.length, config.seed );
  auto const n = item.recipes.size();
  for ( std::uint32_t r = 0; r < n; ++r )
    item.job_seeds.push_back( derive_seed( config.seed, item.name, r ) );
  for ( auto& g : item.groups )
    g.resize( n );

  auto job = [&]( std::uint32_t r ) {
    auto opts = config.verify;
    opts.seed = item.job_seeds[r];
    auto const optimized = apply_recipe( item.base_aig, item.recipes[r], config.passes );
    for ( auto const t : network_types )
    {
      auto& v = item.groups[group_index( t )][r];
      auto const where = item.name + " " + artifact_stem( t, r );
      v.replay = replay_script( item, r, t, config );
      v.network = blast( optimized, t );
      v.network_verdict = verify( item.base_aig, v.network, opts, where + " network", where + ".replay.txt" );
      v.asic = map_asic( v.network, lib, config.asic );
      v.asic_verdict = verify( v.network, v.asic, opts, where + " ASIC netlist", where + ".replay.txt" );
      v.fpga = map_lut( v.network, config.lut_k, config.lut );
      v.fpga_verdict = verify( v.network, v.fpga, opts, where + " FPGA netlist", where + ".replay.txt" );
      v.asic_qor = sta( v.asic, lib );
      v.fpga_qor = fpga_qor( v.fpga );
    }
  };

  std::vector<std::exception_ptr> errors( n );
  std::atomic<std::uint32_t> next{ 0 };
  auto worker = [&]() {
    for ( std::uint32_t r = next++; r < n; r = next++ )
    {
      try
      {
        job( r );
      }
      catch ( ... )
      {
        errors[r] = std::current_exception();
      }
    }
  };
  auto const threads = std::min<std::size_t>( std::max( 1u, config.jobs ), std::max<std::size_t>( n, 1u ) );
  std::vector<std::thread> pool;
  for ( std::size_t i = 1; i < threads; ++i )
    pool.emplace_back( worker );
  worker();
  for ( auto& t : pool )
    t.join();
  for ( auto const& e : errors )
    if ( e )
      std::rethrow_exception( e );
  return item;
}

} // namespace

design_item run_flow( circuit const& source, std::string const& name, flow_config const& config )
{
  return run_items( source, name, "source.graphml", write_graphml( source ), config );
}

design_item run_flow( std::filesystem::path const& source, flow_config const& config )
{
  auto const c = load_circuit( source );
  auto ext = source.extension().string();
  std::transform( ext.begin(), ext.end(), ext.begin(), []( unsigned char ch ) { return std::tolower( ch ); } );
  return run_items( c, source.stem().string(), "source" + ext, read_file( source ), config );
}

observation_report check_observations( design_item const& item )
{
  observation_report rep;
  auto const& aig_group = item.groups[group_index( logic_type::aig )];
  std::map<std::pair<std::uint64_t, std::uint32_t>, std::set<std::pair<double, double>>> by_shape;
  for ( auto const& v : aig_group )
  {
    auto const s = stats( v.network );
    by_shape[{ s.and2_count, s.depth }].insert( { v.asic_qor.area, v.asic_qor.arrival } );
  }
  for ( auto const& [shape, qors] : by_shape )
    if ( qors.size() > 1u )
      rep.same_aig_different_qor = true;

  for ( std::size_t r = 0; r < item.recipes.size() && !rep.types_differ; ++r )
    for ( std::size_t a = 0; a < item.groups.size(); ++a )
      for ( std::size_t b = a + 1u; b < item.groups.size(); ++b )
      {
        auto const& qa = item.groups[a][r].asic_qor;
        auto const& qb = item.groups[b][r].asic_qor;
        if ( qa.area != qb.area || qa.arrival != qb.arrival )
          rep.types_differ = true;
      }
  return rep;
}

} // namespace lsdgen

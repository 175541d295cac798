#include <lsdgen/blast/blast.hpp>
#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/stats.hpp>
#include <lsdgen/io/circuit_file.hpp>
#include <lsdgen/io/qor.hpp>
#include <lsdgen/io/recipe_io.hpp>
#include <lsdgen/opt/passes.hpp>
#include <lsdgen/pipeline/archive.hpp>
#include <lsdgen/pipeline/extract.hpp>
#include <lsdgen/pipeline/flow.hpp>
#include <lsdgen/sim/equivalence.hpp>
#include <lsdgen/techmap/mapper.hpp>
#include <lsdgen/techmap/sta.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace lsdgen;

namespace
{

enum exit_code : int
{
  exit_ok = 0,
  exit_usage = 1,
  exit_format = 2,
  exit_verification = 3
};

struct options
{
  std::string input;
  std::string second;
  std::vector<std::string> inputs;
  std::string out;
  std::string lib;
  std::string recipe_file;
  std::string commands;
  std::string type;
  std::string mode;
  std::string kind;
  std::uint64_t seed{ 1u };
  std::uint32_t recipes{ 10u };
  std::uint32_t length{ 10u };
  std::uint32_t lut_k{ 6u };
  std::optional<std::uint32_t> jobs;
  std::uint64_t vectors{ 16384u };
  double wire_delay{ 0.0 };
  bool recover_xor{ false };
  bool self_test{ false };
};

cell_library library_of( options const& o ) { return o.lib.empty() ? mini_library() : load_library( o.lib ); }

void save_or_fail( circuit const& c, std::string const& out )
{
  if ( out.empty() )
    throw usage_error( "--out is required" );
  if ( auto const parent = fs::path( out ).parent_path(); !parent.empty() )
    fs::create_directories( parent );
  save_circuit( c, out );
}

void emit_text( std::string const& text, std::string const& out )
{
  if ( out.empty() )
  {
    std::cout << text;
    return;
  }
  if ( auto const parent = fs::path( out ).parent_path(); !parent.empty() )
    fs::create_directories( parent );
  write_file( out, text );
}

logic_type network_type_of( std::string const& name )
{
  auto const t = parse_logic_type( name );
  if ( !t || std::find( network_types.begin(), network_types.end(), *t ) == network_types.end() )
    throw usage_error( "unknown logic type '" + name + "'; expected aig, oig, xag, mig, primary or gtg" );
  return *t;
}

asic_mode asic_mode_of( std::string const& m )
{
  if ( m.empty() || m == "area" )
    return asic_mode::area;
  if ( m == "delay" )
    return asic_mode::delay;
  throw usage_error( "ASIC mode must be area or delay" );
}

lut_mode lut_mode_of( std::string const& m )
{
  if ( m.empty() || m == "depth" )
    return lut_mode::depth;
  if ( m == "area" )
    return lut_mode::area;
  throw usage_error( "LUT mode must be area or depth" );
}

recipe recipe_of( options const& o )
{
  if ( !o.recipe_file.empty() )
    return read_recipe_string( read_file( o.recipe_file ) );
  recipe r;
  std::stringstream in( o.commands );
  std::string part;
  while ( std::getline( in, part, ';' ) )
  {
    auto const b = part.find_first_not_of( " \t" );
    if ( b == std::string::npos )
      continue;
    auto const e = part.find_last_not_of( " \t" );
    r.commands.push_back( parse_command( part.substr( b, e - b + 1u ) ) );
  }
  return r;
}

std::string stats_json( circuit const& c )
{
  auto const s = stats( c );
  nlohmann::ordered_json j;
  j["name"] = c.name();
  j["type"] = std::string( logic_type_name( c.type() ) );
  j["pis"] = s.pis;
  j["pos"] = s.pos;
  j["ands"] = s.and2_count;
  j["invs"] = s.inverter_count;
  j["edges"] = s.edge_count;
  j["depth"] = s.depth;
  nlohmann::ordered_json gates = nlohmann::ordered_json::object();
  for ( std::size_t g = 0; g < num_gate_types; ++g )
    if ( s.gate_counts[g] != 0u )
      gates[std::string( gate_name( static_cast<gate_type>( g ) ) )] = s.gate_counts[g];
  j["gates"] = std::move( gates );
  return j.dump( 2 ) + "\n";
}

flow_config flow_config_of( options const& o )
{
  flow_config cfg;
  cfg.recipes = o.recipes;
  cfg.length = o.length;
  cfg.seed = o.seed;
  if ( !o.lib.empty() )
    cfg.library = load_library( o.lib );
  cfg.lut_k = o.lut_k;
  cfg.jobs = resolve_jobs( o.jobs );
  return cfg;
}

int run_verify( options const& o )
{
  auto const a = load_circuit( o.input );
  auto const b = load_circuit( o.second );
  equivalence_options eo;
  eo.seed = o.seed;
  auto const v = check_equivalence( a, b, eo );
  std::cout << v.tier();
  if ( v.result == equivalence_verdict::kind::not_falsified )
    std::cout << " (" << v.vectors << " random assignments)";
  if ( !v.holds() )
  {
    std::cout << "; counterexample:";
    for ( std::size_t i = 0; i < v.counterexample.size(); ++i )
      std::cout << ' ' << a[a.pis()[i]].name << '=' << ( v.counterexample[i] ? 1 : 0 );
  }
  std::cout << '\n';
  return v.holds() ? exit_ok : exit_verification;
}

int run_self_test( options const& o )
{
  auto cfg = flow_config_of( o );
  auto const item = run_flow( fs::path( o.input ), cfg );
  auto const rep = check_observations( item );
  std::cout << "observation 1 (same AIG size and depth, different mapped QoR): "
            << ( rep.same_aig_different_qor ? "true" : "false" ) << '\n';
  std::cout << "observation 2 (logic types differ in mapped QoR): " << ( rep.types_differ ? "true" : "false" ) << '\n';
  return exit_ok;
}

int dispatch( std::string const& name, options const& o )
{
  if ( name == "synth-gtg" )
    save_or_fail( to_gtg( load_circuit( o.input ) ), o.out );
  else if ( name == "to-aig" )
    save_or_fail( to_aig( load_circuit( o.input ) ), o.out );
  else if ( name == "gen-recipes" )
  {
    auto const recipes = gen_recipes( o.recipes, o.length, o.seed );
    if ( o.out.empty() )
    {
      for ( auto const& r : recipes )
        std::cout << "# recipe " << r.id << '\n' << write_recipe( r );
    }
    else
    {
      fs::create_directories( o.out );
      for ( auto const& r : recipes )
      {
        char file[32];
        std::snprintf( file, sizeof( file ), "r%04u.txt", r.id );
        write_file( fs::path( o.out ) / file, write_recipe( r ) );
      }
    }
  }
  else if ( name == "optimize" )
  {
    if ( o.recipe_file.empty() == o.commands.empty() )
      throw usage_error( "give exactly one of --recipe and --commands" );
    save_or_fail( apply_recipe( load_circuit( o.input ), recipe_of( o ) ), o.out );
  }
  else if ( name == "blast" )
    save_or_fail( blast( load_circuit( o.input ), network_type_of( o.type ), blast_options{ o.recover_xor } ), o.out );
  else if ( name == "map-asic" )
    save_or_fail( map_asic( load_circuit( o.input ), library_of( o ), asic_mode_of( o.mode ) ), o.out );
  else if ( name == "map-fpga" )
    save_or_fail( map_lut( load_circuit( o.input ), o.lut_k, lut_mode_of( o.mode ) ), o.out );
  else if ( name == "sta" )
  {
    auto const c = load_circuit( o.input );
    auto const q = c.type() == logic_type::fpga_netlist ? fpga_qor( c ) : sta( c, library_of( o ), o.wire_delay );
    emit_text( write_qor( q ), o.out );
  }
  else if ( name == "verify" )
    return run_verify( o );
  else if ( name == "run-all" )
  {
    if ( o.out.empty() )
      throw usage_error( "--out is required" );
    auto const cfg = flow_config_of( o );
    for ( auto const& design : o.inputs )
    {
      auto const dir = pack( run_flow( fs::path( design ), cfg ), o.out );
      std::cout << dir.string() << '\n';
    }
  }
  else if ( name == "pack" )
  {
    if ( o.out.empty() )
      throw usage_error( "--out is required" );
    std::cout << pack( unpack( o.input ), o.out ).string() << '\n';
  }
  else if ( name == "unpack" )
  {
    auto const item = unpack( o.input );
    auto const n = count_artifacts( item );
    nlohmann::ordered_json j;
    j["design"] = item.name;
    j["recipes"] = item.recipes.size();
    j["networks"] = n.networks;
    j["asic_netlists"] = n.asic_netlists;
    j["fpga_netlists"] = n.fpga_netlists;
    j["qor_records"] = n.qor_records;
    j["hashes"] = "verified";
    std::cout << j.dump( 2 ) << '\n';
  }
  else if ( name == "extract" )
  {
    std::vector<design_item> items;
    for ( auto const& d : o.inputs )
      items.push_back( unpack( d ) );
    std::ostringstream text;
    if ( o.kind == "classification" )
      write_jsonl( extract_classification( items ), text );
    else if ( o.kind == "ranking" )
      write_jsonl( extract_ranking( items ), text );
    else if ( o.kind == "qor" )
      write_jsonl( extract_qor( items ), text );
    else if ( o.kind == "probability" )
      write_jsonl( extract_probability( items, o.vectors, o.seed ), text );
    else
      throw usage_error( "unknown extraction task '" + o.kind + "'" );
    emit_text( text.str(), o.out );
  }
  else if ( name == "stats" )
  {
    if ( o.self_test )
      return run_self_test( o );
    emit_text( stats_json( load_circuit( o.input ) ), o.out );
  }
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "lsdgen: logic synthesis dataset generator" };
  app.require_subcommand( 1 );
  options o;

  auto input = []( CLI::App* sub, options& o ) { sub->add_option( "input", o.input, "Input file" )->required(); };
  auto out = []( CLI::App* sub, options& o, bool required ) {
    auto* opt = sub->add_option( "--out", o.out, "Output path" );
    if ( required )
      opt->required();
  };

  auto* synth = app.add_subcommand( "synth-gtg", "Convert a design into a GTG network" );
  input( synth, o );
  out( synth, o, true );

  auto* to_aig_cmd = app.add_subcommand( "to-aig", "Convert a circuit into a strashed AIG" );
  input( to_aig_cmd, o );
  out( to_aig_cmd, o, true );

  auto* gen = app.add_subcommand( "gen-recipes", "Draw distinct optimization recipes" );
  gen->add_option( "--recipes", o.recipes, "Number of recipes" );
  gen->add_option( "--length", o.length, "Commands per recipe" );
  gen->add_option( "--seed", o.seed, "Master seed" );
  out( gen, o, false );

  auto* opt = app.add_subcommand( "optimize", "Apply a recipe to an AIG" );
  input( opt, o );
  opt->add_option( "--recipe", o.recipe_file, "Recipe file, one command per line" );
  opt->add_option( "--commands", o.commands, "Recipe inline, commands separated by ';'" );
  out( opt, o, true );

  auto* bl = app.add_subcommand( "blast", "Convert an AIG into another network type" );
  input( bl, o );
  bl->add_option( "--type", o.type, "aig, oig, xag, mig, primary or gtg" )->required();
  bl->add_flag( "--recover-xor", o.recover_xor, "XAG: fuse XOR structures" );
  out( bl, o, true );

  auto* masic = app.add_subcommand( "map-asic", "Standard-cell mapping" );
  input( masic, o );
  masic->add_option( "--lib", o.lib, "Cell library JSON (default: bundled mini library)" );
  masic->add_option( "--mode", o.mode, "area or delay" );
  out( masic, o, true );

  auto* mfpga = app.add_subcommand( "map-fpga", "LUT mapping" );
  input( mfpga, o );
  mfpga->add_option( "--lut-k", o.lut_k, "LUT size" );
  mfpga->add_option( "--mode", o.mode, "area or depth" );
  out( mfpga, o, true );

  auto* sta_cmd = app.add_subcommand( "sta", "QoR of a mapped netlist" );
  input( sta_cmd, o );
  sta_cmd->add_option( "--lib", o.lib, "Cell library JSON (default: bundled mini library)" );
  sta_cmd->add_option( "--wire-delay", o.wire_delay, "Delay per extra fanout" );
  out( sta_cmd, o, false );

  auto* ver = app.add_subcommand( "verify", "Combinational equivalence check" );
  ver->add_option( "a", o.input, "First circuit" )->required();
  ver->add_option( "b", o.second, "Second circuit" )->required();
  ver->add_option( "--seed", o.seed, "Seed for random simulation" );

  auto flow_flags = [&]( CLI::App* sub ) {
    sub->add_option( "--recipes", o.recipes, "Number of recipes" );
    sub->add_option( "--length", o.length, "Commands per recipe" );
    sub->add_option( "--seed", o.seed, "Master seed" );
    sub->add_option( "--lib", o.lib, "Cell library JSON (default: bundled mini library)" );
    sub->add_option( "--lut-k", o.lut_k, "LUT size" );
    sub->add_option( "--jobs", o.jobs, "Worker threads (default: LSDGEN_JOBS or 1)" );
  };

  auto* all = app.add_subcommand( "run-all", "Run the whole flow and pack each design" );
  all->add_option( "designs", o.inputs, "Design files" )->required();
  flow_flags( all );
  out( all, o, true );

  auto* pk = app.add_subcommand( "pack", "Verify a packed design and write it to another root" );
  input( pk, o );
  out( pk, o, true );

  auto* up = app.add_subcommand( "unpack", "Verify every hash of a packed design" );
  input( up, o );

  auto* ex = app.add_subcommand( "extract", "Build a task sub-dataset as JSON lines" );
  ex->add_option( "task", o.kind, "classification, ranking, qor or probability" )
      ->required()
      ->check( CLI::IsMember( { "classification", "ranking", "qor", "probability" } ) );
  ex->add_option( "designs", o.inputs, "Packed design directories" )->required();
  ex->add_option( "--vectors", o.vectors, "Monte-Carlo vectors (probability)" );
  ex->add_option( "--seed", o.seed, "Monte-Carlo seed (probability)" );
  out( ex, o, false );

  auto* st = app.add_subcommand( "stats", "Circuit statistics, or the observation self-test on a design" );
  input( st, o );
  st->add_flag( "--self-test", o.self_test, "Run the flow and report the observation checks" );
  flow_flags( st );
  out( st, o, false );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e ) == 0 ? exit_ok : exit_usage;
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return exit_usage;
  }

  try
  {
    return dispatch( app.get_subcommands().front()->get_name(), o );
  }
  catch ( usage_error const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( format_error const& e )
  {
    std::cerr << "format error: " << e.what() << '\n';
    return exit_format;
  }
  catch ( structural_error const& e )
  {
    std::cerr << "format error: " << e.what() << '\n';
    return exit_format;
  }
  catch ( verification_error const& e )
  {
    std::cerr << "verification failed: " << e.what() << '\n';
    return exit_verification;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

#include <lsdgen/core/errors.hpp>
#include <lsdgen/io/circuit_file.hpp>
#include <lsdgen/io/graphml.hpp>
#include <lsdgen/io/qor.hpp>
#include <lsdgen/io/recipe_io.hpp>
#include <lsdgen/io/verilog.hpp>
#include <lsdgen/pipeline/archive.hpp>

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>

namespace lsdgen
{

using ojson = nlohmann::ordered_json;

std::string group_name( logic_type t )
{
  std::string s( logic_type_name( t ) );
  std::transform( s.begin(), s.end(), s.begin(), []( unsigned char ch ) { return std::tolower( ch ); } );
  return s;
}

namespace
{

std::string recipe_tag( std::uint32_t recipe )
{
  char buffer[16];
  std::snprintf( buffer, sizeof( buffer ), "r%04u", recipe );
  return buffer;
}

} // namespace

std::string recipe_path( std::uint32_t recipe ) { return "raw/recipes/" + recipe_tag( recipe ) + ".txt"; }

std::string artifact_stem( logic_type t, std::uint32_t recipe ) { return group_name( t ) + "/" + recipe_tag( recipe ); }

std::string sha256_hex( std::string const& bytes )
{
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if ( EVP_Digest( bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr ) != 1 )
    throw std::runtime_error( "SHA-256 computation failed" );
  std::string hex;
  char buffer[3];
  for ( unsigned int i = 0; i < length; ++i )
  {
    std::snprintf( buffer, sizeof( buffer ), "%02x", digest[i] );
    hex += buffer;
  }
  return hex;
}

namespace
{

/* files of a design directory with their manifest */
struct layout
{
  ojson manifest;
  std::vector<std::pair<std::string, std::string>> files;

  ojson add( std::string path, std::string content )
  {
    ojson e;
    e["path"] = path;
    e["sha256"] = sha256_hex( content );
    files.emplace_back( std::move( path ), std::move( content ) );
    return e;
  }

  ojson add_circuit( std::string const& stem, circuit const& c, std::string const& verdict )
  {
    ojson e;
    e["graphml"] = add( stem + ".graphml", write_graphml( c ) );
    e["verilog"] = add( stem + ".v", write_verilog( c ) );
    if ( !verdict.empty() )
      e["verdict"] = verdict;
    return e;
  }
};

layout build( design_item const& item )
{
  layout l;
  auto& m = l.manifest;
  m["design"] = item.name;
  m["toolkit_version"] = std::string( toolkit_version );
  m["created"] = item.created;
  m["master_seed"] = item.seed;
  m["recipe_count"] = item.recipes.size();
  m["recipe_length"] = item.length;
  m["lut_k"] = item.lut_k;

  ojson raw;
  raw["source"] = l.add( "raw/" + item.source_file, item.source_text );
  raw["library"] = l.add( "raw/library.json", item.library_text );
  raw["gtg"] = l.add_circuit( "raw/gtg", item.gtg, item.gtg_verdict );
  raw["base_aig"] = l.add_circuit( "raw/base_aig", item.base_aig, item.base_verdict );
  raw["recipes"] = ojson::array();
  for ( std::uint32_t r = 0; r < item.recipes.size(); ++r )
    raw["recipes"].push_back( l.add( recipe_path( r ), write_recipe( item.recipes[r] ) ) );
  m["raw"] = std::move( raw );

  ojson groups;
  for ( auto const t : network_types )
  {
    auto& list = groups[group_name( t )] = ojson::array();
    auto const& g = item.groups[group_index( t )];
    for ( std::uint32_t r = 0; r < g.size(); ++r )
    {
      auto const& v = g[r];
      auto const stem = artifact_stem( t, r );
      ojson e;
      e["recipe"] = r;
      e["job_seed"] = item.job_seeds.at( r );
      e["network"] = l.add_circuit( stem + ".network", v.network, v.network_verdict );
      e["asic"] = l.add_circuit( stem + ".asic", v.asic, v.asic_verdict );
      e["fpga"] = l.add_circuit( stem + ".fpga", v.fpga, v.fpga_verdict );
      e["asic_qor"] = l.add( stem + ".asic_qor.json", write_qor( v.asic_qor ) );
      e["fpga_qor"] = l.add( stem + ".fpga_qor.json", write_qor( v.fpga_qor ) );
      e["replay"] = l.add( stem + ".replay.txt", v.replay );
      list.push_back( std::move( e ) );
    }
  }
  m["groups"] = std::move( groups );
  return l;
}

} // namespace

std::string manifest_text( design_item const& item ) { return build( item ).manifest.dump( 2 ) + "\n"; }

std::filesystem::path pack( design_item const& item, std::filesystem::path const& dir )
{
  auto const l = build( item );
  auto const root = dir / item.name;
  for ( auto const& [path, content] : l.files )
  {
    auto const full = root / path;
    std::filesystem::create_directories( full.parent_path() );
    write_file( full, content );
  }
  write_file( root / "manifest.json", l.manifest.dump( 2 ) + "\n" );
  return root;
}

namespace
{

class reader
{
public:
  explicit reader( std::filesystem::path root ) : root_( std::move( root ) ) {}

  std::string const& file( ojson const& e )
  {
    auto const path = e.at( "path" ).get<std::string>();
    if ( auto it = cache_.find( path ); it != cache_.end() )
      return it->second;
    std::filesystem::path const rel( path );
    if ( rel.is_absolute() || std::any_of( rel.begin(), rel.end(), []( auto const& p ) { return p == ".."; } ) )
      throw format_error( "manifest path escapes the design directory: " + path );
    auto const full = root_ / rel;
    if ( !std::filesystem::is_regular_file( full ) )
      throw format_error( "missing file " + path );
    auto content = read_file( full );
    if ( sha256_hex( content ) != e.at( "sha256" ).get<std::string>() )
      throw format_error( "hash mismatch for " + path );
    return cache_.emplace( path, std::move( content ) ).first->second;
  }

  circuit graph( ojson const& e ) { return read_graphml_string( file( e.at( "graphml" ) ) ); }

  /* every listed file, including Verilog mirrors that are not otherwise loaded */
  void check_all( ojson const& j )
  {
    if ( j.is_object() && j.contains( "path" ) && j.contains( "sha256" ) )
    {
      file( j );
      return;
    }
    if ( j.is_structured() )
      for ( auto const& child : j )
        check_all( child );
  }

private:
  std::filesystem::path root_;
  std::map<std::string, std::string> cache_;
};

std::string verdict_of( ojson const& e ) { return e.value( "verdict", std::string{} ); }

} // namespace

design_item unpack( std::filesystem::path const& design_dir )
{
  auto const manifest_path = design_dir / "manifest.json";
  if ( !std::filesystem::is_regular_file( manifest_path ) )
    throw format_error( "missing file manifest.json in " + design_dir.string() );
  try
  {
    auto const m = ojson::parse( read_file( manifest_path ) );
    reader rd( design_dir );
    rd.check_all( m );

    design_item item;
    item.name = m.at( "design" ).get<std::string>();
    item.created = m.at( "created" ).get<std::string>();
    item.seed = m.at( "master_seed" ).get<std::uint64_t>();
    item.length = m.at( "recipe_length" ).get<std::uint32_t>();
    item.lut_k = m.at( "lut_k" ).get<std::uint32_t>();

    auto const& raw = m.at( "raw" );
    auto const source_path = raw.at( "source" ).at( "path" ).get<std::string>();
    item.source_file = std::filesystem::path( source_path ).filename().string();
    item.source_text = rd.file( raw.at( "source" ) );
    item.library_text = rd.file( raw.at( "library" ) );
    item.gtg = rd.graph( raw.at( "gtg" ) );
    item.gtg_verdict = verdict_of( raw.at( "gtg" ) );
    item.base_aig = rd.graph( raw.at( "base_aig" ) );
    item.base_verdict = verdict_of( raw.at( "base_aig" ) );
    std::uint32_t id = 0;
    for ( auto const& e : raw.at( "recipes" ) )
      item.recipes.push_back( read_recipe_string( rd.file( e ), id++ ) );
    auto const n = m.at( "recipe_count" ).get<std::size_t>();
    if ( item.recipes.size() != n )
      throw format_error( "manifest lists " + std::to_string( item.recipes.size() ) + " recipes, expected " +
                          std::to_string( n ) );

    for ( auto const t : network_types )
    {
      auto const& list = m.at( "groups" ).at( group_name( t ) );
      if ( list.size() != n )
        throw format_error( "group " + group_name( t ) + " has " + std::to_string( list.size() ) + " entries, expected " +
                            std::to_string( n ) );
      auto& g = item.groups[group_index( t )];
      for ( auto const& e : list )
      {
        flow_variant v;
        v.network = rd.graph( e.at( "network" ) );
        v.network_verdict = verdict_of( e.at( "network" ) );
        v.asic = rd.graph( e.at( "asic" ) );
        v.asic_verdict = verdict_of( e.at( "asic" ) );
        v.fpga = rd.graph( e.at( "fpga" ) );
        v.fpga_verdict = verdict_of( e.at( "fpga" ) );
        v.asic_qor = read_qor_string( rd.file( e.at( "asic_qor" ) ) );
        v.fpga_qor = read_qor_string( rd.file( e.at( "fpga_qor" ) ) );
        v.replay = rd.file( e.at( "replay" ) );
        if ( t == logic_type::aig )
          item.job_seeds.push_back( e.at( "job_seed" ).get<std::uint64_t>() );
        g.push_back( std::move( v ) );
      }
    }
    if ( n == 0u )
      item.job_seeds.clear();
    return item;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw format_error( "malformed manifest in " + design_dir.string() + ": " + e.what() );
  }
}

item_counts count_artifacts( design_item const& item )
{
  item_counts c;
  for ( auto const& g : item.groups )
  {
    c.networks += g.size();
    c.asic_netlists += g.size();
    c.fpga_netlists += g.size();
    c.qor_records += 2u * g.size();
  }
  return c;
}

} // namespace lsdgen

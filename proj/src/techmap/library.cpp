#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/truth_table.hpp>
#include <lsdgen/techmap/library.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace lsdgen
{

std::uint64_t apply_npn( std::uint64_t tt, std::uint32_t num_vars, npn_transform const& t )
{
  std::array<std::uint64_t, 4> in{};
  for ( std::uint32_t i = 0; i < num_vars; ++i )
    in[i] = var_masks[t.perm[i]] ^ ( ( ( t.input_negations >> i ) & 1u ) ? ~0ull : 0ull );
  auto const r = evaluate_truth_table( tile_truth_table( tt, num_vars ), std::span<std::uint64_t const>( in.data(), num_vars ) );
  return tile_truth_table( t.output_negated ? ~r : r, num_vars );
}

std::pair<std::uint64_t, npn_transform> npn_canonical( std::uint64_t tt, std::uint32_t num_vars )
{
  if ( num_vars > 4u )
    throw usage_error( "NPN canonicalization supports at most 4 inputs" );
  npn_transform best_t;
  auto best = tile_truth_table( tt, num_vars );
  npn_transform t;
  std::iota( t.perm.begin(), t.perm.end(), std::uint8_t{ 0 } );
  do
  {
    for ( std::uint32_t neg = 0; neg < ( 1u << num_vars ); ++neg )
      for ( int o = 0; o < 2; ++o )
      {
        t.input_negations = static_cast<std::uint8_t>( neg );
        t.output_negated = o == 1;
        auto const v = apply_npn( tt, num_vars, t );
        if ( v < best )
        {
          best = v;
          best_t = t;
        }
      }
  } while ( std::next_permutation( t.perm.begin(), t.perm.begin() + num_vars ) );
  return { best, best_t };
}

cell_library::cell_library( std::string name, std::vector<cell> cells ) : name_( std::move( name ) ), cells_( std::move( cells ) )
{
  std::optional<std::uint32_t> inv;
  bool nand_class = false;
  auto const nand_canon = npn_canonical( 0x7u, 2u ).first;
  for ( std::uint32_t i = 0; i < cells_.size(); ++i )
  {
    auto const& c = cells_[i];
    if ( c.name.empty() )
      throw format_error( "library cell without a name" );
    if ( c.inputs < 1u || c.inputs > 4u )
      throw format_error( "cell " + c.name + " has " + std::to_string( c.inputs ) + " inputs; 1 to 4 are supported" );
    if ( c.function != tile_truth_table( c.function, c.inputs ) )
      throw format_error( "cell " + c.name + " function is not a tiled " + std::to_string( c.inputs ) + "-input table" );
    if ( c.pin_delays.size() != c.inputs )
      throw format_error( "cell " + c.name + " needs one pin delay per input" );
    if ( c.area < 0.0 || std::any_of( c.pin_delays.begin(), c.pin_delays.end(), []( double d ) { return d < 0.0; } ) )
      throw format_error( "cell " + c.name + " has a negative area or delay" );
    if ( !by_name_.emplace( c.name, i ).second )
      throw format_error( "duplicate cell name " + c.name );

    auto const canon = npn_canonical( c.function, c.inputs ).first;
    classes_[{ c.inputs, canon }].push_back( i );
    if ( c.inputs == 1u && c.function == 0x5555555555555555ull && ( !inv || c.area < cells_[*inv].area ) )
      inv = i;
    if ( c.inputs == 2u && canon == nand_canon )
      nand_class = true;
  }
  if ( !inv )
    throw format_error( "library " + name_ + " is not complete: no inverter" );
  if ( !nand_class )
    throw format_error( "library " + name_ + " is not complete: no NAND2-equivalent cell" );
  inverter_ = *inv;
}

cell const* cell_library::find( std::string const& name ) const
{
  auto it = by_name_.find( name );
  return it == by_name_.end() ? nullptr : &cells_[it->second];
}

std::vector<std::uint32_t> const& cell_library::npn_class( std::uint64_t tt, std::uint32_t num_vars ) const
{
  static std::vector<std::uint32_t> const none;
  if ( num_vars > 4u )
    return none;
  auto it = classes_.find( { num_vars, npn_canonical( tt, num_vars ).first } );
  return it == classes_.end() ? none : it->second;
}

cell_library read_library( std::istream& in )
{
  try
  {
    auto const j = nlohmann::json::parse( in );
    std::vector<cell> cells;
    for ( auto const& jc : j.at( "cells" ) )
    {
      cell c;
      c.name = jc.at( "name" ).get<std::string>();
      c.inputs = jc.at( "inputs" ).get<std::uint32_t>();
      c.function = from_hex( jc.at( "function" ).get<std::string>() );
      c.area = jc.at( "area" ).get<double>();
      c.pin_delays = jc.at( "pin_delays" ).get<std::vector<double>>();
      cells.push_back( std::move( c ) );
    }
    return cell_library( j.at( "name" ).get<std::string>(), std::move( cells ) );
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw format_error( std::string( "malformed cell library: " ) + e.what() );
  }
}

cell_library read_library_string( std::string const& text )
{
  std::istringstream in( text );
  return read_library( in );
}

cell_library load_library( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw usage_error( "cannot open cell library " + path );
  return read_library( in );
}

void write_library( cell_library const& lib, std::ostream& out )
{
  nlohmann::ordered_json j;
  j["name"] = lib.name();
  j["cells"] = nlohmann::ordered_json::array();
  for ( auto const& c : lib.cells() )
  {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["inputs"] = c.inputs;
    jc["function"] = to_hex( c.function );
    jc["area"] = c.area;
    jc["pin_delays"] = c.pin_delays;
    j["cells"].push_back( std::move( jc ) );
  }
  out << j.dump( 2 ) << '\n';
}

std::string write_library( cell_library const& lib )
{
  std::ostringstream out;
  write_library( lib, out );
  return out.str();
}

cell_library mini_library()
{
  static char const* const text =
#include "mini_lib.inc"
      ;
  return read_library_string( text );
}

} // namespace lsdgen

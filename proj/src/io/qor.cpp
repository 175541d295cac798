#include <lsdgen/core/errors.hpp>
#include <lsdgen/io/qor.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lsdgen
{

namespace
{

std::string format_number( double value )
{
  char buffer[40];
  std::snprintf( buffer, sizeof( buffer ), "%.17g", value );
  return buffer;
}

double require_non_negative( nlohmann::json const& j, char const* key )
{
  if ( !j.contains( key ) )
    throw format_error( std::string( "qor: missing field '" ) + key + "'" );
  if ( !j[key].is_number() )
    throw format_error( std::string( "qor: field '" ) + key + "' is not a number" );
  auto const value = j[key].get<double>();
  if ( !( value >= 0.0 ) || !std::isfinite( value ) )
    throw format_error( std::string( "qor: field '" ) + key + "' must be a non-negative number" );
  return value;
}

} // namespace

void write_qor( qor_record const& q, std::ostream& out )
{
  out << "{\"area\": " << format_number( q.area ) << ", \"arrival\": " << format_number( q.arrival )
      << ", \"gate_count\": " << q.gate_count << ", \"depth\": " << q.depth << ", \"backend\": \""
      << ( q.backend == backend::asic ? "asic" : "fpga" ) << "\"}\n";
}

std::string write_qor( qor_record const& q )
{
  std::ostringstream out;
  write_qor( q, out );
  return out.str();
}

qor_record read_qor( std::istream& in )
{
  nlohmann::json j;
  try
  {
    in >> j;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw format_error( std::string( "qor: " ) + e.what() );
  }
  if ( !j.is_object() )
    throw format_error( "qor: expected a JSON object" );

  qor_record q;
  if ( !j.contains( "backend" ) || !j["backend"].is_string() )
    throw format_error( "qor: missing field 'backend'" );
  auto const b = j["backend"].get<std::string>();
  if ( b == "asic" )
    q.backend = backend::asic;
  else if ( b == "fpga" )
    q.backend = backend::fpga;
  else
    throw format_error( "qor: unknown backend '" + b + "'" );

  q.area = require_non_negative( j, "area" );
  q.gate_count = static_cast<std::uint64_t>( require_non_negative( j, "gate_count" ) );
  q.depth = static_cast<std::uint32_t>( require_non_negative( j, "depth" ) );
  if ( q.backend == backend::fpga && !j.contains( "arrival" ) )
    q.arrival = static_cast<double>( q.depth );
  else
    q.arrival = require_non_negative( j, "arrival" );
  return q;
}

qor_record read_qor_string( std::string const& text )
{
  std::istringstream in( text );
  return read_qor( in );
}

} // namespace lsdgen

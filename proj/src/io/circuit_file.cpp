#include <lsdgen/core/errors.hpp>
#include <lsdgen/io/aiger.hpp>
#include <lsdgen/io/circuit_file.hpp>
#include <lsdgen/io/graphml.hpp>
#include <lsdgen/io/verilog.hpp>

#include <fstream>
#include <sstream>

namespace lsdgen
{

std::string read_file( std::filesystem::path const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw usage_error( "cannot open '" + path.string() + "'" );
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file( std::filesystem::path const& path, std::string const& content )
{
  if ( path.has_parent_path() )
    std::filesystem::create_directories( path.parent_path() );
  std::ofstream out( path, std::ios::binary | std::ios::trunc );
  if ( !out )
    throw usage_error( "cannot write '" + path.string() + "'" );
  out << content;
}

circuit load_circuit( std::filesystem::path const& path )
{
  auto const ext = path.extension().string();
  if ( ext != ".graphml" && ext != ".aag" && ext != ".aig" && ext != ".v" )
    throw usage_error( "unsupported circuit file extension '" + ext + "'" );
  std::istringstream in( read_file( path ) );
  if ( ext == ".graphml" )
    return read_graphml( in );
  if ( ext == ".aag" || ext == ".aig" )
    return read_aiger( in, path.stem().string() );
  if ( ext == ".v" )
    return read_verilog( in );
  throw format_error( "unsupported circuit file extension '" + ext + "'" );
}

void save_circuit( circuit const& c, std::filesystem::path const& path )
{
  auto const ext = path.extension().string();
  std::ostringstream out;
  if ( ext == ".graphml" )
    write_graphml( c, out );
  else if ( ext == ".aag" || ext == ".aig" )
    write_aiger( c, out, ext == ".aag" );
  else if ( ext == ".v" )
    write_verilog( c, out );
  else
    throw format_error( "unsupported circuit file extension '" + ext + "'" );
  write_file( path, out.str() );
}

} // namespace lsdgen

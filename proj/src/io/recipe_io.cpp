#include <lsdgen/core/errors.hpp>
#include <lsdgen/io/recipe_io.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace lsdgen
{

void write_recipe( recipe const& r, std::ostream& out )
{
  for ( auto const& cmd : r.commands )
    out << cmd.to_string() << '\n';
}

std::string write_recipe( recipe const& r )
{
  std::ostringstream out;
  write_recipe( r, out );
  return out.str();
}

recipe read_recipe( std::istream& in, std::uint32_t id )
{
  recipe r;
  r.id = id;
  std::string line;
  std::size_t line_no = 0;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( !line.empty() && line.back() == '\r' )
      line.pop_back();
    auto const first = line.find_first_not_of( " \t" );
    if ( first == std::string::npos || line[first] == '#' )
      continue;
    try
    {
      r.commands.push_back( parse_command( line ) );
    }
    catch ( format_error const& e )
    {
      throw format_error( "recipe line " + std::to_string( line_no ) + ": " + e.what() );
    }
  }
  return r;
}

recipe read_recipe_string( std::string const& text, std::uint32_t id )
{
  std::istringstream in( text );
  return read_recipe( in, id );
}

} // namespace lsdgen

#include <lsdgen/core/errors.hpp>
#include <lsdgen/opt/recipe.hpp>

#include <sstream>

namespace lsdgen
{

std::string_view command_kind_name( command_kind kind )
{
  switch ( kind )
  {
  case command_kind::balance:
    return "balance";
  case command_kind::rewrite:
    return "rewrite";
  case command_kind::refactor:
    return "refactor";
  case command_kind::resub:
    return "resub";
  }
  return "?";
}

std::string command::to_string() const
{
  std::string text( command_kind_name( kind ) );
  if ( preserve_level )
    text += " -l";
  if ( zero_gain )
    text += " -z";
  return text;
}

command parse_command( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string word;
  if ( !( in >> word ) )
    throw format_error( "empty command" );

  command cmd;
  if ( word == "balance" )
    cmd.kind = command_kind::balance;
  else if ( word == "rewrite" )
    cmd.kind = command_kind::rewrite;
  else if ( word == "refactor" )
    cmd.kind = command_kind::refactor;
  else if ( word == "resub" )
    cmd.kind = command_kind::resub;
  else
    throw format_error( "unknown command '" + word + "'" );

  /* flags must appear in the order -l, -z, each at most once */
  int stage = 0;
  while ( in >> word )
  {
    if ( cmd.kind == command_kind::balance )
      throw format_error( "balance takes no flags: '" + std::string( text ) + "'" );
    if ( word == "-l" && stage == 0 )
    {
      cmd.preserve_level = true;
      stage = 1;
    }
    else if ( word == "-z" && stage <= 1 )
    {
      cmd.zero_gain = true;
      stage = 2;
    }
    else
    {
      throw format_error( "unexpected token '" + word + "' in command '" + std::string( text ) + "'" );
    }
  }
  return cmd;
}

std::array<command, 16> const& command_pool()
{
  static std::array<command, 16> const pool = [] {
    std::array<command, 16> p{};
    std::size_t i = 0;
    for ( int k = 0; k < 4; ++k )
      p[i++] = command{ command_kind::balance, false, false };
    for ( auto kind : { command_kind::rewrite, command_kind::refactor, command_kind::resub } )
    {
      p[i++] = command{ kind, false, false };
      p[i++] = command{ kind, true, false };
      p[i++] = command{ kind, false, true };
      p[i++] = command{ kind, true, true };
    }
    return p;
  }();
  return pool;
}

} // namespace lsdgen

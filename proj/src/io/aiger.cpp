#include <lsdgen/core/errors.hpp>
#include <lsdgen/io/aiger.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace lsdgen
{

namespace
{

void write_varint( std::ostream& out, std::uint64_t x )
{
  while ( x & ~0x7full )
  {
    out.put( static_cast<char>( ( x & 0x7fu ) | 0x80u ) );
    x >>= 7u;
  }
  out.put( static_cast<char>( x ) );
}

std::uint64_t read_varint( std::istream& in )
{
  std::uint64_t x = 0u;
  unsigned shift = 0u;
  while ( true )
  {
    auto const ch = in.get();
    if ( ch == std::char_traits<char>::eof() )
      throw format_error( "aiger: unexpected end of file in binary AND section" );
    x |= static_cast<std::uint64_t>( ch & 0x7f ) << shift;
    if ( ( ch & 0x80 ) == 0 )
      return x;
    shift += 7u;
    if ( shift > 63u )
      throw format_error( "aiger: varint overflow" );
  }
}

std::uint64_t parse_unsigned( std::string const& token, char const* what )
{
  if ( token.empty() || token.find_first_not_of( "0123456789" ) != std::string::npos )
    throw format_error( std::string( "aiger: malformed " ) + what + " '" + token + "'" );
  return std::stoull( token );
}

std::string next_line( std::istream& in, char const* what )
{
  std::string line;
  if ( !std::getline( in, line ) )
    throw format_error( std::string( "aiger: unexpected end of file while reading " ) + what );
  if ( !line.empty() && line.back() == '\r' )
    line.pop_back();
  return line;
}

} // namespace

void write_aiger( circuit const& c, std::ostream& out, bool ascii )
{
  if ( c.type() != logic_type::aig )
    throw usage_error( "aiger: only AIG circuits can be written, got " + std::string( logic_type_name( c.type() ) ) );

  auto const order = topo_order( c );
  std::vector<std::uint64_t> literal( c.size(), 0u );
  for ( std::size_t i = 0; i < c.num_pis(); ++i )
    literal[c.pis()[i]] = 2u * ( i + 1u );

  struct and_def
  {
    std::uint64_t lhs, rhs0, rhs1;
  };
  std::vector<and_def> ands;
  std::uint64_t next_var = c.num_pis() + 1u;

  for ( auto n : order )
  {
    auto const& nd = c[n];
    switch ( nd.gate )
    {
    case gate_type::const0:
      literal[n] = 0u;
      break;
    case gate_type::const1:
      literal[n] = 1u;
      break;
    case gate_type::pi:
      break;
    case gate_type::not_:
      literal[n] = literal[nd.fanins[0]] ^ 1u;
      break;
    case gate_type::buffer:
    case gate_type::po:
      literal[n] = literal[nd.fanins[0]];
      break;
    case gate_type::and2:
    {
      auto a = literal[nd.fanins[0]];
      auto b = literal[nd.fanins[1]];
      if ( a < b )
        std::swap( a, b );
      literal[n] = 2u * next_var++;
      ands.push_back( { literal[n], a, b } );
      break;
    }
    default:
      throw usage_error( "aiger: gate " + std::string( gate_name( nd.gate ) ) + " cannot be written" );
    }
  }

  auto const max_var = next_var - 1u;
  out << ( ascii ? "aag " : "aig " ) << max_var << ' ' << c.num_pis() << " 0 " << c.num_pos() << ' ' << ands.size()
      << '\n';
  if ( ascii )
  {
    for ( std::size_t i = 0; i < c.num_pis(); ++i )
      out << 2u * ( i + 1u ) << '\n';
  }
  for ( auto po : c.pos() )
    out << literal[po] << '\n';
  if ( ascii )
  {
    for ( auto const& a : ands )
      out << a.lhs << ' ' << a.rhs0 << ' ' << a.rhs1 << '\n';
  }
  else
  {
    for ( auto const& a : ands )
    {
      write_varint( out, a.lhs - a.rhs0 );
      write_varint( out, a.rhs0 - a.rhs1 );
    }
  }
  for ( std::size_t i = 0; i < c.num_pis(); ++i )
    if ( !c[c.pis()[i]].name.empty() )
      out << 'i' << i << ' ' << c[c.pis()[i]].name << '\n';
  for ( std::size_t i = 0; i < c.num_pos(); ++i )
    if ( !c[c.pos()[i]].name.empty() )
      out << 'o' << i << ' ' << c[c.pos()[i]].name << '\n';
}

circuit read_aiger( std::istream& in, std::string design_name )
{
  std::istringstream header( next_line( in, "header" ) );
  std::string format;
  header >> format;
  if ( format != "aag" && format != "aig" )
    throw format_error( "aiger: malformed header, expected 'aag' or 'aig'" );
  bool const ascii = format == "aag";

  std::vector<std::uint64_t> fields;
  std::string token;
  while ( header >> token )
    fields.push_back( parse_unsigned( token, "header field" ) );
  if ( fields.size() < 5u )
    throw format_error( "aiger: malformed header, expected M I L O A" );
  auto const max_var = fields[0], num_inputs = fields[1], num_latches = fields[2], num_outputs = fields[3],
             num_ands = fields[4];
  if ( num_latches != 0u )
    throw format_error( "aiger: sequential circuits (latches) are unsupported" );
  for ( std::size_t i = 5; i < fields.size(); ++i )
    if ( fields[i] != 0u )
      throw format_error( "aiger: sequential circuits (bad/constraint/justice/fairness) are unsupported" );
  if ( num_inputs + num_ands > max_var )
    throw format_error( "aiger: header M is smaller than I + A" );

  auto check_literal = [&]( std::uint64_t lit ) {
    if ( ( lit >> 1u ) > max_var )
      throw format_error( "aiger: literal " + std::to_string( lit ) + " out of range" );
    return lit;
  };

  std::vector<std::uint64_t> input_lits( num_inputs );
  if ( ascii )
  {
    for ( auto& lit : input_lits )
    {
      lit = check_literal( parse_unsigned( next_line( in, "inputs" ), "input literal" ) );
      if ( lit < 2u || ( lit & 1u ) )
        throw format_error( "aiger: invalid input literal " + std::to_string( lit ) );
    }
  }
  else
  {
    for ( std::size_t i = 0; i < num_inputs; ++i )
      input_lits[i] = 2u * ( i + 1u );
  }

  std::vector<std::uint64_t> output_lits( num_outputs );
  for ( auto& lit : output_lits )
    lit = check_literal( parse_unsigned( next_line( in, "outputs" ), "output literal" ) );

  /* var -> (rhs0, rhs1) */
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> and_defs;
  std::vector<std::uint64_t> and_order;
  and_order.reserve( num_ands );
  for ( std::size_t i = 0; i < num_ands; ++i )
  {
    std::uint64_t lhs, rhs0, rhs1;
    if ( ascii )
    {
      std::istringstream line( next_line( in, "and gates" ) );
      std::string t0, t1, t2;
      if ( !( line >> t0 >> t1 >> t2 ) )
        throw format_error( "aiger: malformed AND line" );
      lhs = parse_unsigned( t0, "and literal" );
      rhs0 = parse_unsigned( t1, "and literal" );
      rhs1 = parse_unsigned( t2, "and literal" );
    }
    else
    {
      lhs = 2u * ( num_inputs + i + 1u );
      auto const d0 = read_varint( in );
      auto const d1 = read_varint( in );
      if ( d0 > lhs )
        throw format_error( "aiger: invalid delta in binary AND section" );
      rhs0 = lhs - d0;
      if ( d1 > rhs0 )
        throw format_error( "aiger: invalid delta in binary AND section" );
      rhs1 = rhs0 - d1;
    }
    check_literal( lhs );
    check_literal( rhs0 );
    check_literal( rhs1 );
    if ( lhs < 2u || ( lhs & 1u ) )
      throw format_error( "aiger: invalid AND literal " + std::to_string( lhs ) );
    if ( !and_defs.emplace( lhs >> 1u, std::make_pair( rhs0, rhs1 ) ).second )
      throw format_error( "aiger: literal " + std::to_string( lhs ) + " defined twice" );
    and_order.push_back( lhs >> 1u );
  }

  std::vector<std::string> input_names( num_inputs ), output_names( num_outputs );
  std::string line;
  while ( std::getline( in, line ) )
  {
    if ( !line.empty() && line.back() == '\r' )
      line.pop_back();
    if ( line.empty() )
      continue;
    if ( line[0] == 'c' )
      break;
    auto const space = line.find( ' ' );
    if ( space == std::string::npos || ( line[0] != 'i' && line[0] != 'o' && line[0] != 'l' ) )
      throw format_error( "aiger: malformed symbol line '" + line + "'" );
    auto const pos = parse_unsigned( line.substr( 1, space - 1 ), "symbol index" );
    auto name = line.substr( space + 1 );
    if ( line[0] == 'i' && pos < num_inputs )
      input_names[pos] = std::move( name );
    else if ( line[0] == 'o' && pos < num_outputs )
      output_names[pos] = std::move( name );
    else
      throw format_error( "aiger: symbol index out of range in '" + line + "'" );
  }

  circuit c( logic_type::aig, std::move( design_name ) );
  std::unordered_map<std::uint64_t, node_index> var_node;
  std::unordered_map<std::uint64_t, node_index> not_node;
  for ( std::size_t i = 0; i < num_inputs; ++i )
  {
    auto const var = input_lits[i] >> 1u;
    if ( var_node.count( var ) || and_defs.count( var ) )
      throw format_error( "aiger: literal " + std::to_string( input_lits[i] ) + " defined twice" );
    var_node[var] = c.add_pi( input_names[i].empty() ? "n" + std::to_string( input_lits[i] ) : input_names[i] );
  }

  auto literal_node = [&]( std::uint64_t lit ) -> node_index {
    auto const var = lit >> 1u;
    if ( var == 0u )
      return c.get_constant( lit & 1u );
    auto it = var_node.find( var );
    if ( it == var_node.end() )
      throw format_error( "aiger: literal " + std::to_string( lit ) + " is used but never defined" );
    if ( ( lit & 1u ) == 0u )
      return it->second;
    auto [nit, inserted] = not_node.emplace( var, 0u );
    if ( inserted )
      nit->second = c.add_node( gate_type::not_, { it->second }, "n" + std::to_string( lit ) );
    return nit->second;
  };

  /* ANDs may be listed in any order in ASCII files; resolve dependencies depth first */
  std::unordered_map<std::uint64_t, bool> in_progress;
  auto define = [&]( std::uint64_t root ) {
    std::vector<std::uint64_t> stack{ root };
    while ( !stack.empty() )
    {
      auto const var = stack.back();
      if ( var_node.count( var ) )
      {
        stack.pop_back();
        continue;
      }
      auto const& [rhs0, rhs1] = and_defs.at( var );
      bool ready = true;
      for ( auto lit : { rhs0, rhs1 } )
      {
        auto const v = lit >> 1u;
        if ( v != 0u && !var_node.count( v ) )
        {
          if ( !and_defs.count( v ) )
            throw format_error( "aiger: literal " + std::to_string( lit ) + " is used but never defined" );
          if ( in_progress[v] )
            throw format_error( "aiger: combinational cycle through literal " + std::to_string( lit ) );
          ready = false;
          stack.push_back( v );
        }
      }
      if ( ready )
      {
        auto const a = literal_node( rhs0 );
        auto const b = literal_node( rhs1 );
        var_node[var] = c.add_node( gate_type::and2, { a, b }, "n" + std::to_string( 2u * var ) );
        in_progress[var] = false;
        stack.pop_back();
      }
      else
      {
        in_progress[var] = true;
      }
    }
  };
  for ( auto var : and_order )
    define( var );

  for ( std::size_t i = 0; i < num_outputs; ++i )
  {
    auto const driver = literal_node( output_lits[i] );
    c.add_po( driver, output_names[i].empty() ? "po" + std::to_string( i ) : output_names[i] );
  }
  return c;
}

} // namespace lsdgen

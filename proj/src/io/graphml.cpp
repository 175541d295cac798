#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/truth_table.hpp>
#include <lsdgen/io/graphml.hpp>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>

namespace lsdgen
{

namespace
{

std::string xml_escape( std::string const& text )
{
  std::string out;
  out.reserve( text.size() );
  for ( char ch : text )
  {
    switch ( ch )
    {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    case '\'':
      out += "&apos;";
      break;
    default:
      out += ch;
    }
  }
  return out;
}

template<typename T>
T parse_number( std::string const& text, std::string const& what )
{
  T value{};
  auto const* first = text.data();
  auto const* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars( first, last, value );
  if ( ec != std::errc{} || ptr != last )
    throw format_error( "graphml: malformed " + what + " '" + text + "'" );
  return value;
}

node_index parse_node_id( std::string const& id )
{
  if ( id.size() < 2u || id[0] != 'n' )
    throw format_error( "graphml: unsupported node id '" + id + "'" );
  return parse_number<node_index>( id.substr( 1 ), "node id" );
}

using boost::property_tree::ptree;

/* collects <data key=...> children of an element, translated to attribute names */
std::map<std::string, std::string> read_data( ptree const& element, std::map<std::string, std::string> const& keys )
{
  std::map<std::string, std::string> values;
  for ( auto const& [tag, child] : element )
  {
    if ( tag != "data" )
      continue;
    auto const key = child.get<std::string>( "<xmlattr>.key", "" );
    auto it = keys.find( key );
    values[it == keys.end() ? key : it->second] = child.get_value<std::string>();
  }
  return values;
}

} // namespace

void write_graphml( circuit const& c, std::ostream& out )
{
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  out << "  <key id=\"logic_type\" for=\"graph\" attr.name=\"logic_type\" attr.type=\"string\"/>\n";
  out << "  <key id=\"design\" for=\"graph\" attr.name=\"design\" attr.type=\"string\"/>\n";
  out << "  <key id=\"type\" for=\"node\" attr.name=\"type\" attr.type=\"string\"/>\n";
  out << "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n";
  out << "  <key id=\"tt\" for=\"node\" attr.name=\"tt\" attr.type=\"string\"/>\n";
  out << "  <key id=\"origin\" for=\"node\" attr.name=\"origin\" attr.type=\"long\"/>\n";
  out << "  <key id=\"slot\" for=\"edge\" attr.name=\"slot\" attr.type=\"int\"/>\n";
  out << "  <graph id=\"G\" edgedefault=\"directed\">\n";
  out << "    <data key=\"logic_type\">" << logic_type_name( c.type() ) << "</data>\n";
  out << "    <data key=\"design\">" << xml_escape( c.name() ) << "</data>\n";

  for ( auto n : topo_order( c ) )
  {
    auto const& nd = c[n];
    out << "    <node id=\"n" << n << "\">\n";
    out << "      <data key=\"type\">" << gate_name( nd.gate ) << "</data>\n";
    out << "      <data key=\"name\">" << xml_escape( nd.name ) << "</data>\n";
    out << "      <data key=\"tt\">" << to_hex( nd.truth_table ) << "</data>\n";
    if ( nd.origin_index )
      out << "      <data key=\"origin\">" << *nd.origin_index << "</data>\n";
    out << "    </node>\n";
  }

  for ( auto const& nd : c.nodes() )
  {
    for ( std::size_t slot = 0; slot < nd.fanins.size(); ++slot )
    {
      out << "    <edge source=\"n" << nd.fanins[slot] << "\" target=\"n" << nd.index << "\">\n";
      out << "      <data key=\"slot\">" << slot << "</data>\n";
      out << "    </edge>\n";
    }
  }
  out << "  </graph>\n";
  out << "</graphml>\n";
}

std::string write_graphml( circuit const& c )
{
  std::ostringstream out;
  write_graphml( c, out );
  return out.str();
}

circuit read_graphml( std::istream& in )
{
  ptree tree;
  try
  {
    boost::property_tree::read_xml( in, tree );
  }
  catch ( boost::property_tree::xml_parser_error const& e )
  {
    throw format_error( std::string( "graphml: " ) + e.what() );
  }

  auto const root = tree.get_child_optional( "graphml" );
  if ( !root )
    throw format_error( "graphml: missing <graphml> root element" );

  std::map<std::string, std::string> keys;
  for ( auto const& [tag, child] : *root )
  {
    if ( tag == "key" )
      keys[child.get<std::string>( "<xmlattr>.id", "" )] = child.get<std::string>( ptree::path_type( "<xmlattr>/attr.name", '/' ), "" );
  }

  auto const graph = root->get_child_optional( "graph" );
  if ( !graph )
    throw format_error( "graphml: missing <graph> element" );

  auto const graph_data = read_data( *graph, keys );
  auto type_it = graph_data.find( "logic_type" );
  if ( type_it == graph_data.end() )
    throw format_error( "graphml: missing graph attribute 'logic_type'" );
  auto const type = parse_logic_type( type_it->second );
  if ( !type )
    throw format_error( "graphml: unknown logic type '" + type_it->second + "'" );
  auto design_it = graph_data.find( "design" );

  struct pending_node
  {
    gate_type gate;
    std::string name;
    std::uint64_t tt;
    std::optional<std::uint64_t> origin;
  };
  std::map<node_index, pending_node> pending;
  std::vector<std::tuple<node_index, std::uint32_t, node_index>> edges; /* target, slot, source */

  for ( auto const& [tag, child] : *graph )
  {
    if ( tag == "node" )
    {
      auto const id = parse_node_id( child.get<std::string>( "<xmlattr>.id", "" ) );
      auto const data = read_data( child, keys );
      auto type_attr = data.find( "type" );
      if ( type_attr == data.end() )
        throw format_error( "graphml: node n" + std::to_string( id ) + " lacks a 'type' attribute" );
      auto const gate = parse_gate_name( type_attr->second );
      if ( !gate )
        throw format_error( "graphml: unknown gate tag '" + type_attr->second + "'" );
      pending_node pn{ *gate, "", canonical_truth_table( *gate ), std::nullopt };
      if ( auto it = data.find( "name" ); it != data.end() )
        pn.name = it->second;
      if ( auto it = data.find( "tt" ); it != data.end() )
        pn.tt = from_hex( it->second );
      if ( auto it = data.find( "origin" ); it != data.end() )
        pn.origin = parse_number<std::uint64_t>( it->second, "origin index" );
      if ( !pending.emplace( id, std::move( pn ) ).second )
        throw format_error( "graphml: duplicate node id n" + std::to_string( id ) );
    }
    else if ( tag == "edge" )
    {
      auto const source = parse_node_id( child.get<std::string>( "<xmlattr>.source", "" ) );
      auto const target = parse_node_id( child.get<std::string>( "<xmlattr>.target", "" ) );
      auto const data = read_data( child, keys );
      auto slot_it = data.find( "slot" );
      if ( slot_it == data.end() )
        throw format_error( "graphml: edge n" + std::to_string( source ) + " -> n" + std::to_string( target ) +
                            " lacks a 'slot' attribute" );
      edges.emplace_back( target, parse_number<std::uint32_t>( slot_it->second, "slot" ), source );
    }
  }

  circuit c( *type, design_it == graph_data.end() ? std::string{} : design_it->second );
  node_index expected = 0;
  for ( auto& [id, pn] : pending )
  {
    if ( id != expected )
      throw format_error( "graphml: node ids are not dense, missing n" + std::to_string( expected ) );
    auto const index = c.add_node( pn.gate, {}, std::move( pn.name ), pn.tt );
    if ( index != id )
      throw format_error( "graphml: duplicate constant node n" + std::to_string( id ) );
    if ( pn.origin )
      c.set_origin_index( index, *pn.origin );
    ++expected;
  }

  std::sort( edges.begin(), edges.end() );
  std::vector<std::uint32_t> next_slot( c.size(), 0u );
  for ( auto const& [target, slot, source] : edges )
  {
    if ( target >= c.size() || source >= c.size() )
      throw format_error( "graphml: dangling edge n" + std::to_string( source ) + " -> n" + std::to_string( target ) );
    if ( slot != next_slot[target] )
      throw format_error( "graphml: node n" + std::to_string( target ) + " has a missing or duplicate slot " +
                          std::to_string( slot ) );
    ++next_slot[target];
    c.add_fanin( target, source );
  }
  return c;
}

circuit read_graphml_string( std::string const& text )
{
  std::istringstream in( text );
  return read_graphml( in );
}

} // namespace lsdgen

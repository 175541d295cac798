#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/truth_table.hpp>
#include <lsdgen/io/verilog.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lsdgen
{

namespace
{

std::unordered_set<std::string> const& keywords()
{
  static std::unordered_set<std::string> const words = {
      "module", "endmodule", "input",  "output", "inout",  "wire",    "reg",   "assign", "always",    "initial",
      "begin",  "end",       "if",     "else",   "case",   "endcase", "for",   "while",  "posedge",   "negedge",
      "not",    "buf",       "and",    "nand",   "or",     "nor",     "xor",   "xnor",   "parameter", "localparam",
      "integer", "function", "endfunction", "task", "endtask", "generate", "endgenerate", "supply0", "supply1" };
  return words;
}

bool is_identifier( std::string const& name )
{
  if ( name.empty() || !( std::isalpha( static_cast<unsigned char>( name[0] ) ) || name[0] == '_' ) )
    return false;
  for ( char ch : name )
    if ( !( std::isalnum( static_cast<unsigned char>( ch ) ) || ch == '_' || ch == '$' ) )
      return false;
  return !keywords().count( name );
}

std::string primitive_keyword( gate_type g )
{
  switch ( g )
  {
  case gate_type::not_:
    return "not";
  case gate_type::buffer:
    return "buf";
  case gate_type::and2:
    return "and";
  case gate_type::nand2:
    return "nand";
  case gate_type::or2:
    return "or";
  case gate_type::nor2:
    return "nor";
  case gate_type::xor2:
    return "xor";
  case gate_type::xnor2:
    return "xnor";
  default:
    return {};
  }
}

std::string sum_of_products( std::uint64_t tt, std::vector<std::string> const& in )
{
  auto const k = static_cast<std::uint32_t>( in.size() );
  auto const mask = truth_table_mask( k );
  if ( ( tt & mask ) == 0u )
    return "1'b0";
  if ( ( tt & mask ) == mask )
    return "1'b1";
  std::string expr;
  for ( std::uint32_t m = 0; m < ( 1u << k ); ++m )
  {
    if ( !( ( tt >> m ) & 1u ) )
      continue;
    if ( !expr.empty() )
      expr += " | ";
    expr += "(";
    for ( std::uint32_t v = 0; v < k; ++v )
    {
      if ( v )
        expr += " & ";
      expr += ( ( m >> v ) & 1u ) ? in[v] : "~" + in[v];
    }
    expr += ")";
  }
  return expr;
}

std::string gate_expression( gate_type g, std::vector<std::string> const& in, std::uint64_t tt )
{
  switch ( g )
  {
  case gate_type::maj3:
    return "(" + in[0] + " & " + in[1] + ") | (" + in[0] + " & " + in[2] + ") | (" + in[1] + " & " + in[2] + ")";
  case gate_type::nand3:
    return "~(" + in[0] + " & " + in[1] + " & " + in[2] + ")";
  case gate_type::nor3:
    return "~(" + in[0] + " | " + in[1] + " | " + in[2] + ")";
  case gate_type::mux21:
    return "(" + in[2] + " & " + in[1] + ") | (~" + in[2] + " & " + in[0] + ")";
  case gate_type::nmux21:
    return "(" + in[2] + " & " + in[0] + ") | (~" + in[2] + " & " + in[1] + ")";
  case gate_type::aoi21:
    return "~((" + in[0] + " & " + in[1] + ") | " + in[2] + ")";
  case gate_type::oai21:
    return "~((" + in[0] + " | " + in[1] + ") & " + in[2] + ")";
  default:
    return sum_of_products( tt, in );
  }
}

/* ---------------------------------------------------------------- tokenizer */

enum class token_kind
{
  identifier,
  constant,
  symbol,
  end
};

struct token
{
  token_kind kind{ token_kind::end };
  std::string text;
  std::size_t line{ 0 };
};

struct lexed_source
{
  std::vector<token> tokens;
  std::map<std::size_t, std::string> line_comments; /* line -> text after // */
};

lexed_source tokenize( std::string const& src )
{
  lexed_source out;
  std::size_t i = 0, line = 1;
  auto const n = src.size();
  while ( i < n )
  {
    char const ch = src[i];
    if ( ch == '\n' )
    {
      ++line;
      ++i;
    }
    else if ( std::isspace( static_cast<unsigned char>( ch ) ) )
    {
      ++i;
    }
    else if ( ch == '/' && i + 1 < n && src[i + 1] == '/' )
    {
      auto const eol = src.find( '\n', i );
      auto text = src.substr( i + 2, ( eol == std::string::npos ? n : eol ) - i - 2 );
      out.line_comments[line] = text;
      i = eol == std::string::npos ? n : eol;
    }
    else if ( ch == '/' && i + 1 < n && src[i + 1] == '*' )
    {
      auto const close = src.find( "*/", i + 2 );
      if ( close == std::string::npos )
        throw format_error( "verilog: line " + std::to_string( line ) + ": unterminated block comment" );
      line += static_cast<std::size_t>( std::count( src.begin() + static_cast<std::ptrdiff_t>( i ),
                                                    src.begin() + static_cast<std::ptrdiff_t>( close ), '\n' ) );
      i = close + 2;
    }
    else if ( ch == '`' )
    {
      throw format_error( "verilog: line " + std::to_string( line ) + ": unsupported construct (compiler directive)" );
    }
    else if ( ch == '\\' )
    {
      auto j = i + 1;
      while ( j < n && !std::isspace( static_cast<unsigned char>( src[j] ) ) )
        ++j;
      out.tokens.push_back( { token_kind::identifier, src.substr( i + 1, j - i - 1 ), line } );
      i = j;
    }
    else if ( std::isalpha( static_cast<unsigned char>( ch ) ) || ch == '_' )
    {
      auto j = i;
      while ( j < n && ( std::isalnum( static_cast<unsigned char>( src[j] ) ) || src[j] == '_' || src[j] == '$' ) )
        ++j;
      out.tokens.push_back( { token_kind::identifier, src.substr( i, j - i ), line } );
      i = j;
    }
    else if ( std::isdigit( static_cast<unsigned char>( ch ) ) )
    {
      auto j = i;
      while ( j < n && ( std::isalnum( static_cast<unsigned char>( src[j] ) ) || src[j] == '\'' ) )
        ++j;
      auto const text = src.substr( i, j - i );
      if ( text != "1'b0" && text != "1'b1" && text != "0" && text != "1" )
        throw format_error( "verilog: line " + std::to_string( line ) + ": unsupported constant '" + text + "'" );
      out.tokens.push_back( { token_kind::constant, text, line } );
      i = j;
    }
    else if ( std::string_view( "();,=~&|^" ).find( ch ) != std::string_view::npos )
    {
      out.tokens.push_back( { token_kind::symbol, std::string( 1, ch ), line } );
      ++i;
    }
    else
    {
      throw format_error( "verilog: line " + std::to_string( line ) + ": unsupported construct near '" +
                          std::string( 1, ch ) + "'" );
    }
  }
  out.tokens.push_back( { token_kind::end, "", line } );
  return out;
}

/* ---------------------------------------------------------------- expressions */

struct expr
{
  enum class op
  {
    var,
    constant,
    not_,
    and_,
    or_,
    xor_
  } kind{ op::var };
  std::string name;
  bool value{ false };
  std::unique_ptr<expr> lhs, rhs;
};

using expr_ptr = std::unique_ptr<expr>;

class parser
{
public:
  explicit parser( lexed_source lexed ) : lex_( std::move( lexed ) ) {}

  token const& peek() const { return lex_.tokens[pos_]; }
  token const& next() { return lex_.tokens[pos_++]; }
  bool accept( std::string const& sym )
  {
    if ( peek().kind != token_kind::end && peek().text == sym && peek().kind != token_kind::constant )
    {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect( std::string const& sym )
  {
    if ( !accept( sym ) )
      fail( "expected '" + sym + "', found '" + peek().text + "'" );
  }
  std::string identifier()
  {
    if ( peek().kind != token_kind::identifier )
      fail( "expected identifier, found '" + peek().text + "'" );
    return next().text;
  }
  [[noreturn]] void fail( std::string const& message ) const
  {
    throw format_error( "verilog: line " + std::to_string( peek().line ) + ": " + message );
  }

  /* precedence: ~ > & > ^ > | */
  expr_ptr parse_or()
  {
    auto left = parse_xor();
    while ( accept( "|" ) )
      left = binary( expr::op::or_, std::move( left ), parse_xor() );
    return left;
  }
  expr_ptr parse_xor()
  {
    auto left = parse_and();
    while ( accept( "^" ) )
      left = binary( expr::op::xor_, std::move( left ), parse_and() );
    return left;
  }
  expr_ptr parse_and()
  {
    auto left = parse_unary();
    while ( accept( "&" ) )
      left = binary( expr::op::and_, std::move( left ), parse_unary() );
    return left;
  }
  expr_ptr parse_unary()
  {
    if ( accept( "~" ) )
    {
      auto e = std::make_unique<expr>();
      e->kind = expr::op::not_;
      e->lhs = parse_unary();
      return e;
    }
    if ( accept( "(" ) )
    {
      auto e = parse_or();
      expect( ")" );
      return e;
    }
    if ( peek().kind == token_kind::constant )
    {
      auto e = std::make_unique<expr>();
      e->kind = expr::op::constant;
      auto const& text = next().text;
      e->value = text == "1'b1" || text == "1";
      return e;
    }
    auto e = std::make_unique<expr>();
    e->kind = expr::op::var;
    e->name = identifier();
    return e;
  }

  std::map<std::size_t, std::string> const& comments() const { return lex_.line_comments; }

private:
  static expr_ptr binary( expr::op kind, expr_ptr a, expr_ptr b )
  {
    auto e = std::make_unique<expr>();
    e->kind = kind;
    e->lhs = std::move( a );
    e->rhs = std::move( b );
    return e;
  }

  lexed_source lex_;
  std::size_t pos_{ 0 };
};

void collect_vars( expr const& e, std::vector<std::string>& vars )
{
  if ( e.kind == expr::op::var )
  {
    if ( std::find( vars.begin(), vars.end(), e.name ) == vars.end() )
      vars.push_back( e.name );
    return;
  }
  if ( e.lhs )
    collect_vars( *e.lhs, vars );
  if ( e.rhs )
    collect_vars( *e.rhs, vars );
}

std::uint64_t evaluate_expr( expr const& e, std::unordered_map<std::string, std::uint64_t> const& env )
{
  switch ( e.kind )
  {
  case expr::op::var:
    return env.at( e.name );
  case expr::op::constant:
    return e.value ? ~0ull : 0ull;
  case expr::op::not_:
    return ~evaluate_expr( *e.lhs, env );
  case expr::op::and_:
    return evaluate_expr( *e.lhs, env ) & evaluate_expr( *e.rhs, env );
  case expr::op::or_:
    return evaluate_expr( *e.lhs, env ) | evaluate_expr( *e.rhs, env );
  case expr::op::xor_:
    return evaluate_expr( *e.lhs, env ) ^ evaluate_expr( *e.rhs, env );
  }
  return 0u;
}

/* one driver of a net */
struct driver
{
  enum class kind
  {
    primitive,
    assign
  } what{ kind::assign };
  gate_type gate{ gate_type::buffer };
  std::vector<std::string> inputs;
  expr_ptr rhs;
  std::optional<std::string> tag;
  std::size_t line{ 0 };
};

} // namespace

void write_verilog( circuit const& c, std::ostream& out )
{
  std::vector<std::string> net( c.size() );
  std::set<std::string> used;
  auto claim = [&]( node_index n, std::string const& preferred, std::string const& fallback ) {
    std::string name = is_identifier( preferred ) && !used.count( preferred ) ? preferred : fallback;
    if ( used.count( name ) )
    {
      std::size_t k = 1;
      while ( used.count( name + "_" + std::to_string( k ) ) )
        ++k;
      name += "_" + std::to_string( k );
    }
    used.insert( name );
    net[n] = name;
  };
  for ( std::size_t i = 0; i < c.num_pis(); ++i )
    claim( c.pis()[i], c[c.pis()[i]].name, "pi" + std::to_string( i ) );
  for ( std::size_t i = 0; i < c.num_pos(); ++i )
    claim( c.pos()[i], c[c.pos()[i]].name, "po" + std::to_string( i ) );
  auto const order = topo_order( c );
  for ( auto n : order )
  {
    auto const& nd = c[n];
    if ( nd.gate == gate_type::pi || nd.gate == gate_type::po )
      continue;
    auto const preferred = nd.gate == gate_type::cell ? std::string{} : nd.name;
    claim( n, preferred, "n" + std::to_string( n ) );
  }

  std::string module = is_identifier( c.name() ) ? c.name() : "top";
  out << "// logic_type: " << logic_type_name( c.type() ) << "\n";
  out << "module " << module << " (";
  bool first = true;
  for ( auto pi : c.pis() )
  {
    out << ( first ? "" : ", " ) << net[pi];
    first = false;
  }
  for ( auto po : c.pos() )
  {
    out << ( first ? "" : ", " ) << net[po];
    first = false;
  }
  out << ");\n";
  for ( auto pi : c.pis() )
    out << "  input " << net[pi] << ";\n";
  for ( auto po : c.pos() )
    out << "  output " << net[po] << ";\n";
  for ( auto n : order )
  {
    auto const g = c[n].gate;
    if ( g != gate_type::pi && g != gate_type::po )
      out << "  wire " << net[n] << ";\n";
  }

  for ( auto n : order )
  {
    auto const& nd = c[n];
    std::vector<std::string> in;
    for ( auto f : nd.fanins )
      in.push_back( net[f] );
    switch ( nd.gate )
    {
    case gate_type::pi:
    case gate_type::po:
      break;
    case gate_type::const0:
      out << "  assign " << net[n] << " = 1'b0;\n";
      break;
    case gate_type::const1:
      out << "  assign " << net[n] << " = 1'b1;\n";
      break;
    case gate_type::not_:
    case gate_type::buffer:
    case gate_type::and2:
    case gate_type::nand2:
    case gate_type::or2:
    case gate_type::nor2:
    case gate_type::xor2:
    case gate_type::xnor2:
      out << "  " << primitive_keyword( nd.gate ) << " g" << n << " (" << net[n];
      for ( auto const& i : in )
        out << ", " << i;
      out << ");\n";
      break;
    default:
    {
      out << "  assign " << net[n] << " = " << gate_expression( nd.gate, in, nd.truth_table ) << "; // "
          << gate_name( nd.gate );
      if ( nd.gate == gate_type::cell )
        out << ' ' << ( is_identifier( nd.name ) || !nd.name.empty() ? nd.name : "UNNAMED" );
      if ( !is_fixed_function( nd.gate ) )
        out << ' ' << to_hex( nd.truth_table );
      for ( auto const& i : in )
        out << ' ' << i;
      out << "\n";
      break;
    }
    }
  }
  for ( auto po : c.pos() )
    out << "  assign " << net[po] << " = " << net[c[po].fanins[0]] << ";\n";
  out << "endmodule\n";
}

std::string write_verilog( circuit const& c )
{
  std::ostringstream out;
  write_verilog( c, out );
  return out.str();
}

circuit read_verilog( std::istream& in )
{
  std::string const source( ( std::istreambuf_iterator<char>( in ) ), std::istreambuf_iterator<char>() );
  parser p( tokenize( source ) );

  std::optional<logic_type> declared_type;
  for ( auto const& [line, text] : p.comments() )
  {
    auto const key = text.find( "logic_type:" );
    if ( key != std::string::npos )
    {
      std::istringstream value( text.substr( key + 11 ) );
      std::string word;
      value >> word;
      declared_type = parse_logic_type( word );
      if ( !declared_type )
        throw format_error( "verilog: line " + std::to_string( line ) + ": unknown logic type '" + word + "'" );
      break;
    }
  }

  if ( p.peek().text != "module" )
    p.fail( "expected 'module'" );
  p.next();
  auto const module_name = p.identifier();
  std::vector<std::string> port_order;
  if ( p.accept( "(" ) )
  {
    if ( !p.accept( ")" ) )
    {
      do
        port_order.push_back( p.identifier() );
      while ( p.accept( "," ) );
      p.expect( ")" );
    }
  }
  p.expect( ";" );

  std::vector<std::string> inputs, outputs;
  std::unordered_set<std::string> declared;
  std::unordered_map<std::string, driver> drivers;

  static std::map<std::string, gate_type> const primitives = {
      { "not", gate_type::not_ }, { "buf", gate_type::buffer }, { "and", gate_type::and2 },
      { "nand", gate_type::nand2 }, { "or", gate_type::or2 },   { "nor", gate_type::nor2 },
      { "xor", gate_type::xor2 },   { "xnor", gate_type::xnor2 } };

  auto add_driver = [&]( std::string const& target, driver d ) {
    if ( drivers.count( target ) )
      throw format_error( "verilog: line " + std::to_string( d.line ) + ": net '" + target + "' has multiple drivers" );
    drivers.emplace( target, std::move( d ) );
  };

  while ( true )
  {
    auto const& tok = p.peek();
    if ( tok.kind == token_kind::end )
      p.fail( "missing 'endmodule'" );
    if ( tok.kind != token_kind::identifier )
      p.fail( "unexpected '" + tok.text + "'" );
    auto const word = tok.text;
    auto const line = tok.line;
    if ( word == "endmodule" )
    {
      p.next();
      break;
    }
    if ( word == "input" || word == "output" || word == "wire" )
    {
      p.next();
      do
      {
        auto const name = p.identifier();
        if ( word == "input" )
          inputs.push_back( name );
        else if ( word == "output" )
          outputs.push_back( name );
        declared.insert( name );
      } while ( p.accept( "," ) );
      p.expect( ";" );
    }
    else if ( word == "assign" )
    {
      p.next();
      auto const target = p.identifier();
      p.expect( "=" );
      driver d;
      d.what = driver::kind::assign;
      d.line = line;
      d.rhs = p.parse_or();
      p.expect( ";" );
      if ( auto it = p.comments().find( line ); it != p.comments().end() )
        d.tag = it->second;
      add_driver( target, std::move( d ) );
    }
    else if ( auto prim = primitives.find( word ); prim != primitives.end() )
    {
      p.next();
      if ( p.peek().kind == token_kind::identifier )
        p.next(); /* instance name */
      p.expect( "(" );
      std::vector<std::string> pins;
      do
        pins.push_back( p.identifier() );
      while ( p.accept( "," ) );
      p.expect( ")" );
      p.expect( ";" );
      auto const expected = gate_arity( prim->second ).min + 1u;
      if ( pins.size() != expected )
        throw format_error( "verilog: line " + std::to_string( line ) + ": primitive '" + word + "' expects " +
                            std::to_string( expected - 1u ) + " inputs" );
      driver d;
      d.what = driver::kind::primitive;
      d.gate = prim->second;
      d.inputs.assign( pins.begin() + 1, pins.end() );
      d.line = line;
      add_driver( pins[0], std::move( d ) );
    }
    else
    {
      throw format_error( "verilog: line " + std::to_string( line ) + ": unsupported construct '" + word + "'" );
    }
  }

  circuit c( declared_type.value_or( logic_type::gtg ), module_name );
  std::unordered_map<std::string, node_index> net_node;
  for ( auto const& name : inputs )
  {
    if ( drivers.count( name ) )
      throw format_error( "verilog: input '" + name + "' is also driven inside the module" );
    net_node[name] = c.add_pi( name );
  }

  std::unordered_set<std::string> visiting;
  std::function<node_index( std::string const& )> resolve;

  auto build_expr = [&]( auto&& self, expr const& e, std::string const& base, std::size_t& counter ) -> node_index {
    switch ( e.kind )
    {
    case expr::op::var:
      return resolve( e.name );
    case expr::op::constant:
      return c.get_constant( e.value );
    case expr::op::not_:
    {
      auto const a = self( self, *e.lhs, base, counter );
      return c.add_node( gate_type::not_, { a }, base + "_" + std::to_string( counter++ ) );
    }
    default:
    {
      auto const a = self( self, *e.lhs, base, counter );
      auto const b = self( self, *e.rhs, base, counter );
      auto const g = e.kind == expr::op::and_ ? gate_type::and2
                                              : ( e.kind == expr::op::or_ ? gate_type::or2 : gate_type::xor2 );
      return c.add_node( g, { a, b }, base + "_" + std::to_string( counter++ ) );
    }
    }
  };

  resolve = [&]( std::string const& name ) -> node_index {
    if ( auto it = net_node.find( name ); it != net_node.end() )
      return it->second;
    auto dit = drivers.find( name );
    if ( dit == drivers.end() )
      throw format_error( "verilog: net '" + name + "' is used but never driven" );
    if ( !visiting.insert( name ).second )
      throw format_error( "verilog: line " + std::to_string( dit->second.line ) + ": combinational loop through '" +
                          name + "'" );
    auto const& d = dit->second;
    node_index result;
    if ( d.what == driver::kind::primitive )
    {
      std::vector<node_index> fanins;
      for ( auto const& i : d.inputs )
        fanins.push_back( resolve( i ) );
      result = c.add_node( d.gate, fanins, name );
    }
    else if ( d.tag )
    {
      std::istringstream tag( *d.tag );
      std::string gate_word;
      tag >> gate_word;
      auto const gate = parse_gate_name( gate_word );
      if ( !gate || gate_arity( *gate ).min < 1u || gate == gate_type::po )
        throw format_error( "verilog: line " + std::to_string( d.line ) + ": unknown gate tag '" + gate_word + "'" );
      std::string node_name = name;
      std::optional<std::uint64_t> tt;
      if ( *gate == gate_type::cell )
        tag >> node_name;
      if ( !is_fixed_function( *gate ) )
      {
        std::string hex;
        tag >> hex;
        tt = from_hex( hex );
      }
      std::vector<std::string> fanin_nets;
      std::string w;
      while ( tag >> w )
        fanin_nets.push_back( w );
      auto const [lo, hi] = gate_arity( *gate );
      if ( fanin_nets.size() < lo || fanin_nets.size() > hi )
        throw format_error( "verilog: line " + std::to_string( d.line ) + ": tag lists " +
                            std::to_string( fanin_nets.size() ) + " fanins for " + gate_word );

      /* the expression must implement the tagged function over the listed fanins */
      std::vector<std::string> vars;
      collect_vars( *d.rhs, vars );
      std::unordered_map<std::string, std::uint64_t> env;
      for ( std::size_t k = 0; k < fanin_nets.size(); ++k )
        if ( !env.count( fanin_nets[k] ) )
          env[fanin_nets[k]] = var_masks[k];
      for ( auto const& v : vars )
        if ( !env.count( v ) )
          throw format_error( "verilog: line " + std::to_string( d.line ) + ": expression uses '" + v +
                              "' which is not a tagged fanin" );
      auto const k = static_cast<std::uint32_t>( fanin_nets.size() );
      auto const expected = is_fixed_function( *gate ) ? canonical_truth_table( *gate ) : tile_truth_table( *tt, k );
      std::vector<std::uint64_t> words;
      for ( auto const& f : fanin_nets )
        words.push_back( env[f] );
      if ( tile_truth_table( evaluate_expr( *d.rhs, env ), k ) !=
           tile_truth_table( evaluate_truth_table( expected, words ), k ) )
        throw format_error( "verilog: line " + std::to_string( d.line ) + ": expression does not match tag " +
                            gate_word );

      std::vector<node_index> fanins;
      for ( auto const& f : fanin_nets )
        fanins.push_back( resolve( f ) );
      result = c.add_node( *gate, fanins, node_name, tt );
    }
    else if ( d.rhs->kind == expr::op::var )
    {
      result = resolve( d.rhs->name );
    }
    else
    {
      std::size_t counter = 0;
      result = build_expr( build_expr, *d.rhs, name, counter );
      if ( d.rhs->kind != expr::op::constant )
        c.rename( result, name );
    }
    visiting.erase( name );
    net_node[name] = result;
    return result;
  };

  /* statement order of drivers is preserved by resolving in source-line order */
  std::vector<std::pair<std::size_t, std::string>> by_line;
  for ( auto const& [name, d] : drivers )
    by_line.emplace_back( d.line, name );
  std::sort( by_line.begin(), by_line.end() );
  for ( auto const& [line, name] : by_line )
    resolve( name );

  for ( auto const& name : outputs )
    c.add_po( resolve( name ), name );

  if ( !declared_type )
  {
    for ( auto t : { logic_type::aig, logic_type::oig, logic_type::xag, logic_type::mig, logic_type::primary,
                     logic_type::gtg, logic_type::fpga_netlist, logic_type::asic_netlist } )
    {
      bool fits = true;
      for ( auto const& nd : c.nodes() )
        fits &= is_allowed( t, nd.gate );
      if ( fits )
      {
        c.set_type( t );
        break;
      }
    }
  }
  for ( auto const& port : port_order )
    if ( std::find( inputs.begin(), inputs.end(), port ) == inputs.end() &&
         std::find( outputs.begin(), outputs.end(), port ) == outputs.end() )
      throw format_error( "verilog: port '" + port + "' has no direction declaration" );
  return c;
}

circuit read_verilog_string( std::string const& text )
{
  std::istringstream in( text );
  return read_verilog( in );
}

} // namespace lsdgen

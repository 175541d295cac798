#include <lsdgen/core/decompose.hpp>
#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/truth_table.hpp>

#include <unordered_map>

namespace lsdgen
{

namespace
{

class template_builder
{
public:
  explicit template_builder( circuit& out ) : out_( out ) {}

  node_index not_( node_index x )
  {
    if ( out_[x].gate == gate_type::not_ )
      return out_[x].fanins[0];
    if ( out_[x].gate == gate_type::const0 || out_[x].gate == gate_type::const1 )
      return out_.get_constant( out_[x].gate == gate_type::const0 );
    if ( auto it = inverter_.find( x ); it != inverter_.end() )
      return it->second;
    auto const n = out_.add_node( gate_type::not_, { x } );
    inverter_.emplace( x, n );
    return n;
  }
  node_index and_( node_index a, node_index b ) { return out_.add_node( gate_type::and2, { a, b } ); }
  node_index or_( node_index a, node_index b ) { return not_( and_( not_( a ), not_( b ) ) ); }
  node_index xor_( node_index a, node_index b ) { return or_( and_( a, not_( b ) ), and_( not_( a ), b ) ); }

  node_index gate( gate_type g, std::vector<node_index> const& in )
  {
    switch ( g )
    {
    case gate_type::buffer:
      return in[0];
    case gate_type::not_:
      return not_( in[0] );
    case gate_type::and2:
      return and_( in[0], in[1] );
    case gate_type::nand2:
      return not_( and_( in[0], in[1] ) );
    case gate_type::or2:
      return or_( in[0], in[1] );
    case gate_type::nor2:
      return and_( not_( in[0] ), not_( in[1] ) );
    case gate_type::xor2:
      return xor_( in[0], in[1] );
    case gate_type::xnor2:
      return not_( xor_( in[0], in[1] ) );
    case gate_type::maj3:
      return or_( and_( in[0], in[1] ), and_( in[2], or_( in[0], in[1] ) ) );
    case gate_type::nand3:
      return not_( and_( and_( in[0], in[1] ), in[2] ) );
    case gate_type::nor3:
      return and_( and_( not_( in[0] ), not_( in[1] ) ), not_( in[2] ) );
    case gate_type::mux21:
      return or_( and_( in[2], in[1] ), and_( not_( in[2] ), in[0] ) );
    case gate_type::nmux21:
      return or_( and_( in[2], in[0] ), and_( not_( in[2] ), in[1] ) );
    case gate_type::aoi21:
      return and_( not_( and_( in[0], in[1] ) ), not_( in[2] ) );
    case gate_type::oai21:
      return not_( and_( or_( in[0], in[1] ), in[2] ) );
    default:
      throw usage_error( "no AND/NOT template for gate " + std::string( gate_name( g ) ) );
    }
  }

  /* Shannon expansion of a tiled table over `in`, highest variable first */
  template<typename Mux>
  node_index shannon( std::uint64_t tt, std::vector<node_index> const& in, Mux&& mux )
  {
    std::unordered_map<std::uint64_t, node_index> memo;
    auto const k = static_cast<std::uint32_t>( in.size() );
    std::function<node_index( std::uint64_t, std::uint32_t )> rec = [&]( std::uint64_t f,
                                                                          std::uint32_t vars ) -> node_index {
      f = tile_truth_table( f, vars );
      if ( f == 0u )
        return out_.get_constant( false );
      if ( f == ~0ull )
        return out_.get_constant( true );
      auto const key = f;
      if ( auto it = memo.find( key ); it != memo.end() )
        return it->second;
      node_index result;
      auto const x = vars - 1u;
      if ( !tt_has_var( f, x ) )
      {
        result = rec( f, x );
      }
      else
      {
        auto const half = 1u << x;
        auto const lo_bits = f & truth_table_mask( x );
        auto const hi_bits = ( f >> half ) & truth_table_mask( x );
        auto const lo = tile_truth_table( lo_bits, x );
        auto const hi = tile_truth_table( hi_bits, x );
        auto const v = in[x];
        if ( lo == 0u && hi == ~0ull )
          result = v;
        else if ( lo == ~0ull && hi == 0u )
          result = not_( v );
        else if ( lo == 0u )
          result = and_( v, rec( hi, x ) );
        else if ( hi == 0u )
          result = and_( not_( v ), rec( lo, x ) );
        else if ( hi == ~0ull )
          result = or_( v, rec( lo, x ) );
        else if ( lo == ~0ull )
          result = or_( not_( v ), rec( hi, x ) );
        else
          result = mux( rec( lo, x ), rec( hi, x ), v );
      }
      memo.emplace( key, result );
      return result;
    };
    return rec( tt, k );
  }

private:
  circuit& out_;
  std::unordered_map<node_index, node_index> inverter_;
};

} // namespace

circuit decompose_to_aig( circuit const& c, logic_type result_type, std::function<bool( node const& )> const& keep )
{
  circuit out( result_type, c.name() );
  template_builder tb( out );
  std::vector<node_index> map( c.size(), 0u );
  for ( auto const p : c.pis() )
    map[p] = out.add_pi( c[p].name );
  for ( auto const n : topo_order( c ) )
  {
    auto const& nd = c[n];
    std::vector<node_index> in;
    for ( auto const f : nd.fanins )
      in.push_back( map[f] );
    switch ( nd.gate )
    {
    case gate_type::pi:
    case gate_type::po:
      break;
    case gate_type::const0:
    case gate_type::const1:
      map[n] = out.get_constant( nd.gate == gate_type::const1 );
      break;
    default:
      if ( keep && keep( nd ) )
      {
        std::optional<std::uint64_t> tt;
        if ( !is_fixed_function( nd.gate ) )
          tt = nd.truth_table;
        map[n] = out.add_node( nd.gate, in, nd.name, tt );
      }
      else if ( is_fixed_function( nd.gate ) )
      {
        map[n] = tb.gate( nd.gate, in );
      }
      else
      {
        map[n] = tb.shannon( nd.truth_table, in, [&]( node_index lo, node_index hi, node_index x ) {
          return tb.or_( tb.and_( x, hi ), tb.and_( tb.not_( x ), lo ) );
        } );
      }
    }
  }
  for ( auto const p : c.pos() )
    out.add_po( map[c[p].fanins[0]], c[p].name );
  return out;
}

circuit decompose_to_gtg( circuit const& c )
{
  circuit out( logic_type::gtg, c.name() );
  template_builder tb( out );
  std::vector<node_index> map( c.size(), 0u );
  for ( auto const p : c.pis() )
    map[p] = out.add_pi( c[p].name );
  for ( auto const n : topo_order( c ) )
  {
    auto const& nd = c[n];
    std::vector<node_index> in;
    for ( auto const f : nd.fanins )
      in.push_back( map[f] );
    switch ( nd.gate )
    {
    case gate_type::pi:
    case gate_type::po:
      break;
    case gate_type::const0:
    case gate_type::const1:
      map[n] = out.get_constant( nd.gate == gate_type::const1 );
      break;
    case gate_type::maj3:
    {
      auto const ab = out.add_node( gate_type::and2, { in[0], in[1] } );
      auto const ac = out.add_node( gate_type::and2, { in[0], in[2] } );
      auto const bc = out.add_node( gate_type::and2, { in[1], in[2] } );
      map[n] = out.add_node( gate_type::or2, { out.add_node( gate_type::or2, { ab, ac } ), bc }, nd.name );
      break;
    }
    case gate_type::lut:
    case gate_type::cell:
      map[n] = tb.shannon( nd.truth_table, in, [&]( node_index lo, node_index hi, node_index x ) {
        return out.add_node( gate_type::mux21, { lo, hi, x } );
      } );
      break;
    default:
      map[n] = out.add_node( nd.gate, in, nd.name );
    }
  }
  for ( auto const p : c.pos() )
    out.add_po( map[c[p].fanins[0]], c[p].name );
  return out;
}

} // namespace lsdgen

#include <lsdgen/blast/blast.hpp>
#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/truth_table.hpp>
#include <lsdgen/sim/simulate.hpp>

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <unordered_map>

namespace lsdgen
{

namespace
{

void require_aig( circuit const& c )
{
  if ( c.type() != logic_type::aig )
    throw usage_error( "blast requires an AIG, got " + std::string( logic_type_name( c.type() ) ) );
  for ( auto const& nd : c.nodes() )
    if ( !is_allowed( logic_type::aig, nd.gate ) )
      throw usage_error( "blast input contains non-AIG gate " + std::string( gate_name( nd.gate ) ) );
}

circuit copy_as( circuit const& c, logic_type target )
{
  circuit out = c;
  out.set_type( target );
  return out;
}

/* signal in the target circuit: node plus pending complement */
struct signal
{
  node_index node{ 0 };
  bool complemented{ false };
};

circuit blast_oig( circuit const& c )
{
  circuit out( logic_type::oig, c.name() );
  std::vector<signal> map( c.size() );
  std::unordered_map<node_index, node_index> inverter;

  auto negate = [&]( node_index n ) -> node_index {
    if ( out[n].gate == gate_type::not_ )
      return out[n].fanins[0];
    if ( auto it = inverter.find( n ); it != inverter.end() )
      return it->second;
    auto const inv = out.add_node( gate_type::not_, { n } );
    inverter.emplace( n, inv );
    return inv;
  };
  auto materialize = [&]( signal s, bool want_complement ) {
    return s.complemented == want_complement ? s.node : negate( s.node );
  };

  for ( auto const p : c.pis() )
    map[p] = { out.add_pi( c[p].name ), false };
  for ( auto const n : topo_order( c ) )
  {
    auto const& nd = c[n];
    switch ( nd.gate )
    {
    case gate_type::const0:
    case gate_type::const1:
      map[n] = { out.get_constant( nd.gate == gate_type::const1 ), false };
      break;
    case gate_type::not_:
      map[n] = { map[nd.fanins[0]].node, !map[nd.fanins[0]].complemented };
      break;
    case gate_type::buffer:
      map[n] = map[nd.fanins[0]];
      break;
    case gate_type::and2:
    {
      auto const a = materialize( map[nd.fanins[0]], true );
      auto const b = materialize( map[nd.fanins[1]], true );
      map[n] = { out.add_node( gate_type::or2, { a, b }, nd.name ), true };
      break;
    }
    default:
      break;
    }
  }
  for ( auto const p : c.pos() )
    out.add_po( materialize( map[c[p].fanins[0]], false ), c[p].name );
  return out;
}

circuit blast_mig( circuit const& c )
{
  circuit out( logic_type::mig, c.name() );
  std::vector<node_index> map( c.size(), 0u );
  for ( auto const p : c.pis() )
    map[p] = out.add_pi( c[p].name );
  for ( auto const n : topo_order( c ) )
  {
    auto const& nd = c[n];
    switch ( nd.gate )
    {
    case gate_type::const0:
    case gate_type::const1:
      map[n] = out.get_constant( nd.gate == gate_type::const1 );
      break;
    case gate_type::not_:
    case gate_type::buffer:
      map[n] = out.add_node( nd.gate, { map[nd.fanins[0]] }, nd.name );
      break;
    case gate_type::and2:
    {
      auto const zero = out.get_constant( false );
      map[n] = out.add_node( gate_type::maj3, { map[nd.fanins[0]], map[nd.fanins[1]], zero }, nd.name );
      break;
    }
    default:
      break;
    }
  }
  for ( auto const p : c.pos() )
    out.add_po( map[c[p].fanins[0]], c[p].name );
  return out;
}

/* ------------------------------------------------------------- peephole */

struct cone
{
  std::vector<node_index> leaves; /* sorted */
  std::vector<node_index> interior;
};

struct cover
{
  bool alias{ false }; /* root equals leaf 0 */
  gate_type gate{ gate_type::buffer };
  std::vector<node_index> fanins;
};

std::vector<gate_type> templates_for( logic_type target )
{
  static std::vector<gate_type> const order = { gate_type::aoi21, gate_type::oai21, gate_type::mux21,
                                                gate_type::nmux21, gate_type::nand3, gate_type::nor3,
                                                gate_type::xnor2, gate_type::xor2,  gate_type::nand2,
                                                gate_type::nor2,  gate_type::or2,   gate_type::and2 };
  std::vector<gate_type> result;
  for ( auto const g : order )
    if ( is_allowed( target, g ) )
      result.push_back( g );
  return result;
}

class peephole
{
public:
  peephole( circuit const& c, logic_type target, std::vector<gate_type> templates )
      : c_( c ), target_( target ), templates_( std::move( templates ) ), fanout_( compute_fanout_counts( c ) )
  {
  }

  circuit run()
  {
    std::vector<bool> required( c_.size(), false );
    std::vector<cover> chosen( c_.size() );
    auto const order = topo_order( c_ );
    for ( auto const p : c_.pos() )
      required[p] = true;

    for ( auto it = order.rbegin(); it != order.rend(); ++it )
    {
      auto const n = *it;
      if ( !required[n] )
        continue;
      auto const g = c_[n].gate;
      if ( g == gate_type::po )
      {
        required[c_[n].fanins[0]] = true;
        continue;
      }
      if ( g == gate_type::pi || g == gate_type::const0 || g == gate_type::const1 )
        continue;
      chosen[n] = choose( n );
      for ( auto const f : chosen[n].fanins )
        required[f] = true;
    }

    circuit out( target_, c_.name() );
    std::vector<node_index> map( c_.size(), 0u );
    for ( auto const p : c_.pis() )
      map[p] = out.add_pi( c_[p].name );
    for ( auto const n : order )
    {
      if ( !required[n] )
        continue;
      auto const& nd = c_[n];
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
      {
        auto const& cv = chosen[n];
        if ( cv.alias )
        {
          map[n] = map[cv.fanins[0]];
          break;
        }
        std::vector<node_index> fanins;
        for ( auto const f : cv.fanins )
          fanins.push_back( map[f] );
        std::optional<std::uint64_t> tt;
        if ( !is_fixed_function( cv.gate ) )
          tt = nd.truth_table;
        map[n] = out.add_node( cv.gate, fanins, nd.name, tt );
      }
      }
    }
    for ( auto const p : c_.pos() )
      out.add_po( map[c_[p].fanins[0]], c_[p].name );
    return out;
  }

private:
  bool expandable( node_index n ) const
  {
    auto const g = c_[n].gate;
    if ( g == gate_type::pi || g == gate_type::po || g == gate_type::const0 || g == gate_type::const1 )
      return false;
    return fanout_[n] == 1u || g == gate_type::not_ || g == gate_type::buffer;
  }

  std::vector<cone> enumerate( node_index root ) const
  {
    std::vector<cone> result;
    std::set<std::vector<node_index>> seen;
    cone start;
    start.leaves = c_[root].fanins;
    std::sort( start.leaves.begin(), start.leaves.end() );
    start.leaves.erase( std::unique( start.leaves.begin(), start.leaves.end() ), start.leaves.end() );
    start.interior = { root };
    std::deque<cone> queue{ start };
    seen.insert( start.leaves );
    while ( !queue.empty() && result.size() < 64u )
    {
      auto cur = std::move( queue.front() );
      queue.pop_front();
      for ( auto const l : cur.leaves )
      {
        if ( !expandable( l ) )
          continue;
        cone next;
        next.interior = cur.interior;
        next.interior.push_back( l );
        for ( auto const x : cur.leaves )
          if ( x != l )
            next.leaves.push_back( x );
        for ( auto const f : c_[l].fanins )
          next.leaves.push_back( f );
        std::sort( next.leaves.begin(), next.leaves.end() );
        next.leaves.erase( std::unique( next.leaves.begin(), next.leaves.end() ), next.leaves.end() );
        if ( next.leaves.size() > 3u || !seen.insert( next.leaves ).second )
          continue;
        queue.push_back( next );
      }
      result.push_back( std::move( cur ) );
    }
    return result;
  }

  std::uint64_t function( cone const& cn, node_index root ) const
  {
    std::unordered_map<node_index, std::uint64_t> value;
    for ( std::size_t i = 0; i < cn.leaves.size(); ++i )
      value[cn.leaves[i]] = var_masks[i];
    std::function<std::uint64_t( node_index )> eval = [&]( node_index n ) -> std::uint64_t {
      if ( auto it = value.find( n ); it != value.end() )
        return it->second;
      auto const& nd = c_[n];
      std::array<std::uint64_t, 6> in{};
      for ( std::size_t i = 0; i < nd.fanins.size(); ++i )
        in[i] = eval( nd.fanins[i] );
      auto const v = evaluate_node( nd, std::span<std::uint64_t const>( in.data(), nd.fanins.size() ) );
      value[n] = v;
      return v;
    };
    auto const k = static_cast<std::uint32_t>( cn.leaves.size() );
    return eval( root ) & truth_table_mask( k );
  }

  cover choose( node_index root ) const
  {
    auto const cones = enumerate( root );
    std::vector<std::uint64_t> functions;
    for ( auto const& cn : cones )
      functions.push_back( function( cn, root ) );

    /* cones whose function ignores a leaf would drop a structural dependency */
    std::vector<bool> usable( cones.size(), true );
    for ( std::size_t i = 0; i < cones.size(); ++i )
      for ( std::uint32_t v = 0; v < cones[i].leaves.size(); ++v )
        if ( !tt_has_var( tile_truth_table( functions[i], static_cast<std::uint32_t>( cones[i].leaves.size() ) ), v ) )
          usable[i] = false;

    /* wires first */
    for ( std::size_t i = 0; i < cones.size(); ++i )
      if ( usable[i] && cones[i].leaves.size() == 1u && functions[i] == ( var_masks[0] & truth_table_mask( 1 ) ) )
        return cover{ true, gate_type::buffer, cones[i].leaves };

    for ( auto const g : templates_ )
    {
      auto const arity = gate_arity( g ).min;
      auto const tt = canonical_truth_table( g );
      for ( std::size_t i = 0; i < cones.size(); ++i )
      {
        auto const& leaves = cones[i].leaves;
        if ( !usable[i] || leaves.size() != arity )
          continue;
        std::vector<std::uint32_t> perm( arity );
        for ( std::uint32_t j = 0; j < arity; ++j )
          perm[j] = j;
        do
        {
          std::array<std::uint64_t, 3> in{};
          for ( std::uint32_t j = 0; j < arity; ++j )
            in[j] = var_masks[perm[j]];
          auto const f = evaluate_truth_table( tt, std::span<std::uint64_t const>( in.data(), arity ) ) &
                         truth_table_mask( arity );
          if ( f == functions[i] )
          {
            cover cv{ false, g, {} };
            for ( std::uint32_t j = 0; j < arity; ++j )
              cv.fanins.push_back( leaves[perm[j]] );
            return cv;
          }
        } while ( std::next_permutation( perm.begin(), perm.end() ) );
      }
    }

    /* single-leaf inverter, then the node itself */
    for ( std::size_t i = 0; i < cones.size(); ++i )
      if ( usable[i] && cones[i].leaves.size() == 1u && functions[i] == ( ~var_masks[0] & truth_table_mask( 1 ) ) &&
           is_allowed( target_, gate_type::not_ ) )
        return cover{ false, gate_type::not_, cones[i].leaves };

    auto const& nd = c_[root];
    if ( !is_allowed( target_, nd.gate ) )
      throw usage_error( "peephole_merge: gate " + std::string( gate_name( nd.gate ) ) + " cannot be expressed in " +
                         std::string( logic_type_name( target_ ) ) );
    return cover{ false, nd.gate, nd.fanins };
  }

  circuit const& c_;
  logic_type target_;
  std::vector<gate_type> templates_;
  std::vector<std::uint32_t> fanout_;
};

} // namespace

circuit peephole_merge( circuit const& c, logic_type target )
{
  if ( target != logic_type::primary && target != logic_type::gtg )
    throw usage_error( "peephole_merge targets PRIMARY or GTG" );
  for ( auto const& nd : c.nodes() )
  {
    auto const g = nd.gate;
    if ( !is_allowed( target, g ) && g != gate_type::and2 && g != gate_type::or2 && g != gate_type::xor2 &&
         g != gate_type::not_ )
      throw usage_error( "peephole_merge: illegal input gate " + std::string( gate_name( g ) ) + " for " +
                         std::string( logic_type_name( target ) ) );
  }
  return peephole( c, target, templates_for( target ) ).run();
}

circuit blast( circuit const& aig, logic_type target, blast_options const& options )
{
  require_aig( aig );
  switch ( target )
  {
  case logic_type::aig:
    return copy_as( aig, logic_type::aig );
  case logic_type::xag:
    if ( options.recover_xor )
      return peephole( copy_as( aig, logic_type::xag ), logic_type::xag, { gate_type::xor2, gate_type::and2 } ).run();
    return copy_as( aig, logic_type::xag );
  case logic_type::oig:
    return blast_oig( aig );
  case logic_type::mig:
    return blast_mig( aig );
  case logic_type::primary:
  case logic_type::gtg:
    return peephole_merge( copy_as( aig, target ), target );
  default:
    throw usage_error( "blast target must be a network type, got " + std::string( logic_type_name( target ) ) );
  }
}

} // namespace lsdgen

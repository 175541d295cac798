#include <lsdgen/core/circuit.hpp>
#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/truth_table.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace lsdgen
{

circuit::circuit( logic_type type, std::string name ) : type_( type ), name_( std::move( name ) ) {}

circuit create_circuit( logic_type type, std::string name ) { return circuit( type, std::move( name ) ); }

node_index circuit::add_node( gate_type gate, std::span<node_index const> fanins, std::string name,
                              std::optional<std::uint64_t> truth_table )
{
  if ( gate == gate_type::const0 && const0_ )
    return *const0_;
  if ( gate == gate_type::const1 && const1_ )
    return *const1_;

  auto const index = static_cast<node_index>( nodes_.size() );
  for ( auto f : fanins )
  {
    if ( f >= index )
      throw structural_error( "node " + std::to_string( index ) + " references missing fanin " + std::to_string( f ) );
  }

  node n;
  n.index = index;
  n.gate = gate;
  n.name = std::move( name );
  n.fanins.assign( fanins.begin(), fanins.end() );
  if ( truth_table )
    n.truth_table = is_fixed_function( gate ) || fanins.empty()
                        ? *truth_table
                        : tile_truth_table( *truth_table, static_cast<std::uint32_t>( fanins.size() ) );
  else
    n.truth_table = canonical_truth_table( gate );

  nodes_.push_back( std::move( n ) );
  switch ( gate )
  {
  case gate_type::pi:
    pis_.push_back( index );
    break;
  case gate_type::po:
    pos_.push_back( index );
    break;
  case gate_type::const0:
    const0_ = index;
    break;
  case gate_type::const1:
    const1_ = index;
    break;
  default:
    break;
  }
  return index;
}

node_index circuit::get_constant( bool value )
{
  return add_node( value ? gate_type::const1 : gate_type::const0, {}, value ? "const1" : "const0" );
}

void circuit::add_fanin( node_index target, node_index fanin )
{
  if ( target >= nodes_.size() || fanin >= nodes_.size() )
    throw structural_error( "edge " + std::to_string( fanin ) + " -> " + std::to_string( target ) +
                            " references a missing node" );
  if ( target == fanin )
    throw structural_error( "self loop on node " + std::to_string( target ) );
  nodes_[target].fanins.push_back( fanin );
}

std::vector<node_index> topo_order( circuit const& c )
{
  auto const n = c.size();
  std::vector<node_index> order( n );

  bool index_ordered = true;
  for ( auto const& nd : c.nodes() )
  {
    for ( auto f : nd.fanins )
    {
      if ( f >= nd.index )
      {
        index_ordered = false;
        break;
      }
    }
    if ( !index_ordered )
      break;
  }
  if ( index_ordered )
  {
    std::iota( order.begin(), order.end(), node_index{ 0 } );
    return order;
  }

  std::vector<std::uint32_t> pending( n, 0u );
  std::vector<std::vector<node_index>> fanouts( n );
  for ( auto const& nd : c.nodes() )
  {
    for ( auto f : nd.fanins )
    {
      if ( f >= n )
        throw structural_error( "node " + std::to_string( nd.index ) + " references missing fanin " +
                                std::to_string( f ) );
      fanouts[f].push_back( nd.index );
      ++pending[nd.index];
    }
  }

  std::priority_queue<node_index, std::vector<node_index>, std::greater<>> ready;
  for ( node_index i = 0; i < n; ++i )
    if ( pending[i] == 0u )
      ready.push( i );

  order.clear();
  while ( !ready.empty() )
  {
    auto const i = ready.top();
    ready.pop();
    order.push_back( i );
    for ( auto fo : fanouts[i] )
      if ( --pending[fo] == 0u )
        ready.push( fo );
  }

  if ( order.size() != n )
  {
    /* walk fanins among the unresolved nodes until one repeats */
    node_index cur = 0;
    while ( pending[cur] == 0u )
      ++cur;
    std::vector<bool> seen( n, false );
    while ( !seen[cur] )
    {
      seen[cur] = true;
      for ( auto f : c[cur].fanins )
      {
        if ( pending[f] != 0u )
        {
          if ( seen[f] )
            throw structural_error( "cycle detected through edge " + std::to_string( f ) + " -> " +
                                    std::to_string( cur ) );
          cur = f;
          break;
        }
      }
    }
    throw structural_error( "cycle detected at node " + std::to_string( cur ) );
  }
  return order;
}

std::vector<std::string> validate( circuit const& c )
{
  std::vector<std::string> violations;
  auto const n = c.size();

  for ( auto const& nd : c.nodes() )
  {
    auto const label = "node " + std::to_string( nd.index ) + " (" + std::string( gate_name( nd.gate ) ) + ")";
    if ( !is_allowed( c.type(), nd.gate ) )
      violations.push_back( label + " is not allowed in " + std::string( logic_type_name( c.type() ) ) );

    auto const [lo, hi] = gate_arity( nd.gate );
    if ( nd.fanins.size() < lo || nd.fanins.size() > hi )
      violations.push_back( label + " has " + std::to_string( nd.fanins.size() ) + " fanins, expected " +
                            ( lo == hi ? std::to_string( lo ) : std::to_string( lo ) + ".." + std::to_string( hi ) ) );

    for ( auto f : nd.fanins )
      if ( f >= n )
        violations.push_back( label + " references missing fanin " + std::to_string( f ) );

    if ( is_fixed_function( nd.gate ) )
    {
      if ( nd.truth_table != canonical_truth_table( nd.gate ) )
        violations.push_back( label + " truth table " + to_hex( nd.truth_table ) + " differs from canonical " +
                              to_hex( canonical_truth_table( nd.gate ) ) );
    }
    else if ( !nd.fanins.empty() && nd.fanins.size() <= 6u &&
              tile_truth_table( nd.truth_table, static_cast<std::uint32_t>( nd.fanins.size() ) ) != nd.truth_table )
    {
      violations.push_back( label + " truth table is not tiled over its fanins" );
    }
  }

  for ( std::size_t i = 0; i < c.pis().size(); ++i )
    if ( c.pis()[i] >= n || c[c.pis()[i]].gate != gate_type::pi )
      violations.push_back( "PI list entry " + std::to_string( i ) + " is not a PI node" );
  for ( std::size_t i = 0; i < c.pos().size(); ++i )
    if ( c.pos()[i] >= n || c[c.pos()[i]].gate != gate_type::po )
      violations.push_back( "PO list entry " + std::to_string( i ) + " is not a PO node" );

  bool dangling = false;
  for ( auto const& nd : c.nodes() )
    for ( auto f : nd.fanins )
      dangling |= f >= n;
  if ( !dangling )
  {
    try
    {
      (void)topo_order( c );
    }
    catch ( structural_error const& e )
    {
      violations.emplace_back( e.what() );
    }
  }
  return violations;
}

void ensure_valid( circuit const& c )
{
  auto const violations = validate( c );
  if ( !violations.empty() )
    throw structural_error( c.name() + ": " + violations.front() );
}

std::vector<std::uint32_t> compute_levels( circuit const& c )
{
  std::vector<std::uint32_t> level( c.size(), 0u );
  for ( auto i : topo_order( c ) )
  {
    auto const& nd = c[i];
    std::uint32_t max_fanin = 0u;
    for ( auto f : nd.fanins )
      max_fanin = std::max( max_fanin, level[f] );
    switch ( nd.gate )
    {
    case gate_type::const0:
    case gate_type::const1:
    case gate_type::pi:
      level[i] = 0u;
      break;
    case gate_type::po:
    case gate_type::not_:
    case gate_type::buffer:
      level[i] = max_fanin;
      break;
    default:
      level[i] = max_fanin + 1u;
      break;
    }
  }
  return level;
}

std::vector<std::uint32_t> compute_fanout_counts( circuit const& c )
{
  std::vector<std::uint32_t> counts( c.size(), 0u );
  for ( auto const& nd : c.nodes() )
    for ( auto f : nd.fanins )
      ++counts[f];
  return counts;
}

} // namespace lsdgen

#include "aig.hpp"

#include <lsdgen/core/errors.hpp>

#include <algorithm>
#include <functional>

namespace lsdgen::detail
{

std::uint32_t aig::add_var( std::uint8_t kind )
{
  auto const v = size();
  fanin0_.push_back( 0u );
  fanin1_.push_back( 0u );
  kind_.push_back( kind );
  level_.push_back( 0u );
  refs_.push_back( 0u );
  dead_.push_back( false );
  repr_.push_back( no_repr );
  fanouts_.emplace_back();
  return v;
}

lit aig::create_pi( std::string name )
{
  auto const v = add_var( 1u );
  pis_.push_back( v );
  pi_names_.push_back( std::move( name ) );
  return make_lit( v );
}

void aig::create_po( lit l, std::string name )
{
  l = resolve( l );
  ++refs_[lit_var( l )];
  pos_.push_back( l );
  po_names_.push_back( std::move( name ) );
}

lit aig::resolve( lit l ) const
{
  while ( repr_[lit_var( l )] != no_repr )
    l = lit_not_cond( repr_[lit_var( l )], lit_compl( l ) );
  return l;
}

std::uint32_t aig::lookup( lit a, lit b ) const
{
  a = resolve( a );
  b = resolve( b );
  if ( a > b )
    std::swap( a, b );
  auto it = strash_.find( key( a, b ) );
  return it == strash_.end() ? 0u : it->second;
}

lit aig::and_( lit a, lit b )
{
  a = resolve( a );
  b = resolve( b );
  if ( a > b )
    std::swap( a, b );
  if ( a == lit_false )
    return lit_false;
  if ( a == lit_true )
    return b;
  if ( a == b )
    return a;
  if ( a == lit_not( b ) )
    return lit_false;

  if ( auto it = strash_.find( key( a, b ) ); it != strash_.end() )
    return make_lit( it->second );

  auto const v = add_var( 2u );
  fanin0_[v] = a;
  fanin1_[v] = b;
  level_[v] = 1u + std::max( level_[lit_var( a )], level_[lit_var( b )] );
  ++refs_[lit_var( a )];
  ++refs_[lit_var( b )];
  fanouts_[lit_var( a )].push_back( v );
  fanouts_[lit_var( b )].push_back( v );
  strash_.emplace( key( a, b ), v );
  return make_lit( v );
}

std::uint32_t aig::num_ands() const
{
  std::uint32_t count = 0;
  for ( std::uint32_t v = 1; v < size(); ++v )
    if ( is_and( v ) && is_live( v ) && refs_[v] > 0u )
      ++count;
  return count;
}

std::uint32_t aig::deref( std::uint32_t v, std::span<std::uint32_t const> boundary, std::vector<std::uint32_t>* cone )
{
  std::uint32_t count = 1u;
  for ( auto const f : { fanin0( v ), fanin1( v ) } )
  {
    auto const u = lit_var( f );
    if ( --refs_[u] == 0u && is_and( u ) && std::find( boundary.begin(), boundary.end(), u ) == boundary.end() )
      count += deref( u, boundary, cone );
  }
  if ( cone )
    cone->push_back( v );
  return count;
}

void aig::ref( std::uint32_t v, std::span<std::uint32_t const> boundary )
{
  for ( auto const f : { fanin0( v ), fanin1( v ) } )
  {
    auto const u = lit_var( f );
    if ( refs_[u]++ == 0u && is_and( u ) && std::find( boundary.begin(), boundary.end(), u ) == boundary.end() )
      ref( u, boundary );
  }
}

void aig::kill( std::uint32_t v )
{
  dead_[v] = true;
  auto const a = fanin0( v );
  auto const b = fanin1( v );
  if ( auto it = strash_.find( key( fanin0_[v], fanin1_[v] ) ); it != strash_.end() && it->second == v )
    strash_.erase( it );
  for ( auto const f : { a, b } )
  {
    auto const u = lit_var( f );
    if ( --refs_[u] == 0u && is_and( u ) && !dead_[u] )
      kill( u );
  }
}

void aig::replace( std::uint32_t v, lit replacement )
{
  replacement = resolve( replacement );
  if ( lit_var( replacement ) == v )
    throw structural_error( "aig: node replaced by itself" );
  refs_[lit_var( replacement )] += refs_[v];
  refs_[v] = 0u;
  kill( v );
  repr_[v] = replacement;
  dead_[v] = false;
}

aig aig::from_circuit( circuit const& c )
{
  if ( c.type() != logic_type::aig )
    throw usage_error( "optimization requires an AIG, got " + std::string( logic_type_name( c.type() ) ) );
  aig a;
  a.name_ = c.name();
  std::vector<lit> map( c.size(), lit_false );
  for ( auto const p : c.pis() )
    map[p] = a.create_pi( c[p].name );
  for ( auto const n : topo_order( c ) )
  {
    auto const& nd = c[n];
    switch ( nd.gate )
    {
    case gate_type::const0:
      map[n] = lit_false;
      break;
    case gate_type::const1:
      map[n] = lit_true;
      break;
    case gate_type::pi:
    case gate_type::po:
      break;
    case gate_type::not_:
      map[n] = lit_not( map[nd.fanins.at( 0 )] );
      break;
    case gate_type::buffer:
      map[n] = map[nd.fanins.at( 0 )];
      break;
    case gate_type::and2:
      map[n] = a.and_( map[nd.fanins.at( 0 )], map[nd.fanins.at( 1 )] );
      break;
    default:
      throw usage_error( "optimization requires an AIG, found gate " + std::string( gate_name( nd.gate ) ) );
    }
  }
  for ( auto const p : c.pos() )
    a.create_po( map[c[p].fanins.at( 0 )], c[p].name );
  return a;
}

circuit aig::to_circuit() const
{
  circuit c( logic_type::aig, name_ );
  std::vector<node_index> node_of( size(), 0u );
  std::vector<node_index> not_of( size(), 0u );
  std::vector<bool> has_node( size(), false ), has_not( size(), false );

  for ( std::size_t i = 0; i < pis_.size(); ++i )
  {
    node_of[pis_[i]] = c.add_pi( pi_names_[i] );
    has_node[pis_[i]] = true;
  }

  std::function<node_index( lit )> build = [&]( lit l ) -> node_index {
    l = resolve( l );
    auto const v = lit_var( l );
    if ( v == 0u )
      return c.get_constant( lit_compl( l ) );
    if ( !has_node[v] )
    {
      /* iterative post-order to survive deep graphs */
      std::vector<std::pair<std::uint32_t, bool>> stack{ { v, false } };
      while ( !stack.empty() )
      {
        auto [u, expanded] = stack.back();
        stack.pop_back();
        if ( has_node[u] )
          continue;
        auto const f0 = fanin0( u );
        auto const f1 = fanin1( u );
        if ( !expanded )
        {
          stack.push_back( { u, true } );
          if ( lit_var( f1 ) != 0u && !has_node[lit_var( f1 )] )
            stack.push_back( { lit_var( f1 ), false } );
          if ( lit_var( f0 ) != 0u && !has_node[lit_var( f0 )] )
            stack.push_back( { lit_var( f0 ), false } );
          continue;
        }
        auto fanin_node = [&]( lit f ) -> node_index {
          auto const w = lit_var( f );
          if ( w == 0u )
            return c.get_constant( lit_compl( f ) );
          if ( !lit_compl( f ) )
            return node_of[w];
          if ( !has_not[w] )
          {
            not_of[w] = c.add_node( gate_type::not_, { node_of[w] } );
            has_not[w] = true;
          }
          return not_of[w];
        };
        auto const a = fanin_node( f0 );
        auto const b = fanin_node( f1 );
        node_of[u] = c.add_node( gate_type::and2, { a, b } );
        has_node[u] = true;
      }
    }
    if ( !lit_compl( l ) )
      return node_of[v];
    if ( !has_not[v] )
    {
      not_of[v] = c.add_node( gate_type::not_, { node_of[v] } );
      has_not[v] = true;
    }
    return not_of[v];
  };

  std::vector<node_index> drivers;
  for ( auto const l : pos_ )
    drivers.push_back( build( l ) );
  for ( std::size_t i = 0; i < pos_.size(); ++i )
    c.add_po( drivers[i], po_names_[i] );
  return c;
}

std::uint32_t aig_depth( aig const& a )
{
  std::vector<std::uint32_t> level( a.size(), 0u );
  std::vector<bool> done( a.size(), false );
  std::uint32_t depth = 0;
  for ( auto const po : a.pos() )
  {
    std::vector<std::uint32_t> stack{ lit_var( a.resolve( po ) ) };
    while ( !stack.empty() )
    {
      auto const u = stack.back();
      if ( done[u] || !a.is_and( u ) )
      {
        done[u] = true;
        stack.pop_back();
        continue;
      }
      auto const x = lit_var( a.fanin0( u ) );
      auto const y = lit_var( a.fanin1( u ) );
      if ( !done[x] )
      {
        stack.push_back( x );
        continue;
      }
      if ( !done[y] )
      {
        stack.push_back( y );
        continue;
      }
      level[u] = 1u + std::max( level[x], level[y] );
      done[u] = true;
      stack.pop_back();
    }
    depth = std::max( depth, level[lit_var( a.resolve( po ) )] );
  }
  return depth;
}

} // namespace lsdgen::detail

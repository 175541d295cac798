#pragma once

#include "aig.hpp"

#include <lsdgen/core/truth_table.hpp>

#include <algorithm>
#include <span>
#include <unordered_map>
#include <vector>

namespace lsdgen::detail
{

/*! \brief Builder that creates real nodes in an AIG. */
struct real_builder
{
  aig& net;

  lit and_( lit a, lit b ) { return net.and_( a, b ); }
  std::uint32_t level( lit l ) const { return net.level( lit_var( net.resolve( l ) ) ); }
};

/*! \brief Builder that counts the nodes a structure would add without touching the AIG.
 *
 * An existing node is reused only when it is live, referenced and not `excluded`.
 * Nodes with zero references belong to a dereferenced cone and count as new.
 */
class virtual_builder
{
public:
  virtual_builder( aig const& net, std::uint32_t excluded ) : net_( net ), excluded_( excluded ), next_( net.size() )
  {
  }

  lit and_( lit a, lit b )
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

    if ( lit_var( a ) < net_.size() && lit_var( b ) < net_.size() )
    {
      auto const v = net_.lookup( a, b );
      if ( v != 0u && v != excluded_ && net_.refs( v ) > 0u )
        return make_lit( v );
    }
    auto const k = ( std::uint64_t( a ) << 32u ) | b;
    if ( auto it = local_.find( k ); it != local_.end() )
      return make_lit( it->second );
    auto const v = next_++;
    local_.emplace( k, v );
    levels_.emplace( v, 1u + std::max( level( a ), level( b ) ) );
    ++added_;
    return make_lit( v );
  }

  std::uint32_t level( lit l ) const
  {
    auto const v = lit_var( l );
    if ( v < net_.size() )
      return net_.level( v );
    return levels_.at( v );
  }

  std::uint32_t added() const { return added_; }

private:
  lit resolve( lit l ) const { return lit_var( l ) < net_.size() ? net_.resolve( l ) : l; }

  aig const& net_;
  std::uint32_t excluded_;
  std::uint32_t next_;
  std::uint32_t added_{ 0 };
  std::unordered_map<std::uint64_t, std::uint32_t> local_;
  std::unordered_map<std::uint32_t, std::uint32_t> levels_;
};

/*! \brief Deterministic decomposition of a truth table into AND nodes over `leaves`.
 *
 * Tries single-variable AND/OR factors, then XOR factors, then Shannon expansion on the
 * variable that leaves the smallest cofactor supports. Subfunctions are memoized up to
 * complement, so shared cofactors become shared nodes.
 */
template<typename Builder>
class cut_synthesizer
{
public:
  cut_synthesizer( Builder& builder, std::span<lit const> leaves ) : builder_( builder ), leaves_( leaves ) {}

  lit run( dyn_truth_table const& f )
  {
    if ( f.is_const0() )
      return lit_false;
    if ( f.is_const1() )
      return lit_true;
    if ( auto it = memo_.find( f ); it != memo_.end() )
      return it->second;
    auto const nf = ~f;
    if ( auto it = memo_.find( nf ); it != memo_.end() )
      return lit_not( it->second );

    std::vector<std::uint32_t> support;
    for ( std::uint32_t v = 0; v < f.num_vars(); ++v )
      if ( f.has_var( v ) )
        support.push_back( v );

    lit result = decompose( f, support );
    memo_.emplace( f, result );
    return result;
  }

private:
  lit or_( lit a, lit b ) { return lit_not( builder_.and_( lit_not( a ), lit_not( b ) ) ); }

  lit decompose( dyn_truth_table const& f, std::vector<std::uint32_t> const& support )
  {
    if ( support.size() == 1u )
    {
      auto const x = leaves_[support[0]];
      return f == dyn_truth_table::nth_var( f.num_vars(), support[0] ) ? x : lit_not( x );
    }

    for ( auto const v : support )
    {
      auto const f0 = f.cofactor0( v );
      auto const f1 = f.cofactor1( v );
      auto const x = leaves_[v];
      if ( f0.is_const0() )
        return builder_.and_( x, run( f1 ) );
      if ( f1.is_const0() )
        return builder_.and_( lit_not( x ), run( f0 ) );
      if ( f1.is_const1() )
        return or_( x, run( f0 ) );
      if ( f0.is_const1() )
        return or_( lit_not( x ), run( f1 ) );
    }

    for ( auto const v : support )
    {
      auto const f0 = f.cofactor0( v );
      auto const f1 = f.cofactor1( v );
      if ( f0 == ~f1 )
      {
        auto const x = leaves_[v];
        auto const g = run( f0 );
        return or_( builder_.and_( x, lit_not( g ) ), builder_.and_( lit_not( x ), g ) );
      }
    }

    std::uint32_t best = support[0];
    std::uint32_t best_cost = ~0u;
    for ( auto const v : support )
    {
      auto const f0 = f.cofactor0( v );
      auto const f1 = f.cofactor1( v );
      std::uint32_t cost = 0;
      for ( auto const u : support )
        cost += ( f0.has_var( u ) ? 1u : 0u ) + ( f1.has_var( u ) ? 1u : 0u );
      if ( cost < best_cost )
      {
        best_cost = cost;
        best = v;
      }
    }
    auto const x = leaves_[best];
    auto const hi = run( f.cofactor1( best ) );
    auto const lo = run( f.cofactor0( best ) );
    return or_( builder_.and_( x, hi ), builder_.and_( lit_not( x ), lo ) );
  }

  Builder& builder_;
  std::span<lit const> leaves_;
  std::unordered_map<dyn_truth_table, lit, dyn_truth_table_hash> memo_;
};

template<typename Builder>
lit synthesize( Builder& builder, dyn_truth_table const& f, std::span<lit const> leaves )
{
  cut_synthesizer<Builder> s( builder, leaves );
  return s.run( f );
}

} // namespace lsdgen::detail

#include "aig.hpp"
#include "synth.hpp"

#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/stats.hpp>
#include <lsdgen/core/truth_table.hpp>
#include <lsdgen/opt/passes.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace lsdgen
{

using namespace detail;

namespace
{

/* returns the strashed input when the result grew in size (unless z) or depth (when l) */
circuit guard( circuit const& base, circuit result, bool preserve_level, bool zero_gain, pass_report* report )
{
  auto const before = stats( base );
  auto const after = stats( result );
  bool const grew = after.and2_count > before.and2_count;
  bool const deeper = after.depth > before.depth;
  if ( ( grew && !zero_gain ) || ( deeper && preserve_level ) )
  {
    if ( report )
      report->reverted = true;
    return base;
  }
  return result;
}

dyn_truth_table small_table( std::uint64_t tt, std::uint32_t num_vars )
{
  dyn_truth_table t( num_vars );
  t.words()[0] = tile_truth_table( tt, num_vars );
  return t;
}

/* ------------------------------------------------------------------ cuts */

struct aig_cut
{
  std::array<std::uint32_t, 6> leaves{};
  std::uint32_t size{ 0 };
  std::uint64_t tt{ 0 };

  std::span<std::uint32_t const> leaf_span() const { return { leaves.data(), size }; }
};

class cut_manager
{
public:
  cut_manager( aig const& net, std::uint32_t k, std::uint32_t limit ) : net_( net ), k_( k ), limit_( limit ) {}

  std::vector<aig_cut> const& cuts( std::uint32_t v )
  {
    if ( v >= memo_.size() )
    {
      memo_.resize( net_.size() );
      done_.resize( net_.size(), false );
    }
    if ( !done_[v] )
      compute( v );
    return memo_[v];
  }

private:
  bool valid( aig_cut const& c ) const
  {
    for ( auto const l : c.leaf_span() )
      if ( !net_.is_live( l ) )
        return false;
    return true;
  }

  void compute( std::uint32_t v )
  {
    std::vector<aig_cut> result;
    if ( v == 0u )
    {
      result.push_back( aig_cut{} );
      memo_[v] = std::move( result );
      done_[v] = true;
      return;
    }
    if ( net_.is_and( v ) )
    {
      auto const a = net_.fanin0( v );
      auto const b = net_.fanin1( v );
      auto const ca = cuts( lit_var( a ) );
      auto const cb = cuts( lit_var( b ) );
      for ( auto const& c0 : ca )
      {
        if ( !valid( c0 ) )
          continue;
        for ( auto const& c1 : cb )
        {
          if ( !valid( c1 ) )
            continue;
          aig_cut m;
          std::array<std::uint32_t, 12> merged{};
          auto const last = std::set_union( c0.leaves.begin(), c0.leaves.begin() + c0.size, c1.leaves.begin(),
                                            c1.leaves.begin() + c1.size, merged.begin() );
          auto const n = static_cast<std::uint32_t>( last - merged.begin() );
          if ( n > k_ )
            continue;
          std::copy( merged.begin(), last, m.leaves.begin() );
          m.size = n;
          if ( std::any_of( result.begin(), result.end(), [&]( aig_cut const& o ) {
                 return o.size == m.size && std::equal( o.leaves.begin(), o.leaves.begin() + o.size, m.leaves.begin() );
               } ) )
            continue;
          auto t0 = expand_truth_table( c0.tt, c0.leaf_span(), m.leaf_span() );
          auto t1 = expand_truth_table( c1.tt, c1.leaf_span(), m.leaf_span() );
          if ( lit_compl( a ) )
            t0 = ~t0;
          if ( lit_compl( b ) )
            t1 = ~t1;
          m.tt = t0 & t1;
          result.push_back( m );
        }
      }
      std::stable_sort( result.begin(), result.end(), []( aig_cut const& x, aig_cut const& y ) {
        if ( x.size != y.size )
          return x.size < y.size;
        return std::lexicographical_compare( x.leaves.begin(), x.leaves.begin() + x.size, y.leaves.begin(),
                                             y.leaves.begin() + y.size );
      } );
      if ( result.size() > limit_ )
        result.resize( limit_ );
    }
    aig_cut trivial;
    trivial.leaves[0] = v;
    trivial.size = 1u;
    trivial.tt = var_masks[0];
    result.push_back( trivial );
    if ( v >= memo_.size() )
    {
      memo_.resize( net_.size() );
      done_.resize( net_.size(), false );
    }
    memo_[v] = std::move( result );
    done_[v] = true;
  }

  aig const& net_;
  std::uint32_t k_;
  std::uint32_t limit_;
  std::vector<std::vector<aig_cut>> memo_;
  std::vector<bool> done_;
};

/* evaluates a candidate structure for `v`; the cone above `boundary` must be dereferenced */
struct candidate
{
  std::int64_t gain{ std::numeric_limits<std::int64_t>::min() };
  std::uint32_t level{ 0 };
  dyn_truth_table function;
  std::vector<lit> leaves;
  bool found{ false };
};

bool accepts( std::int64_t gain, bool zero_gain ) { return gain > 0 || ( zero_gain && gain == 0 ); }

/* builds the candidate for real and redirects `v`; false when the result is `v` itself */
bool commit( aig& net, std::uint32_t v, candidate const& cand )
{
  real_builder rb{ net };
  auto const r = net.resolve( synthesize( rb, cand.function, cand.leaves ) );
  if ( lit_var( r ) == v )
    return false;
  net.replace( v, r );
  return true;
}

} // namespace

circuit strash( circuit const& c ) { return aig::from_circuit( c ).to_circuit(); }

/* ---------------------------------------------------------------- balance */

circuit balance( circuit const& c, pass_report* report )
{
  auto const src = aig::from_circuit( c );
  auto const base = src.to_circuit();

  aig dst;
  dst.set_name( src.name() );
  std::vector<lit> map( src.size(), lit_false );
  std::vector<bool> built( src.size(), false );
  built[0] = true;
  for ( std::size_t i = 0; i < src.pis().size(); ++i )
  {
    map[src.pis()[i]] = dst.create_pi( src.pi_name( i ) );
    built[src.pis()[i]] = true;
  }

  std::uint64_t supergates = 0;
  std::function<lit( std::uint32_t )> build = [&]( std::uint32_t v ) -> lit {
    if ( built[v] )
      return map[v];

    /* collect supergate leaves through uncomplemented single-fanout ANDs */
    std::vector<lit> leaves;
    std::vector<lit> stack{ src.fanin1( v ), src.fanin0( v ) };
    while ( !stack.empty() )
    {
      auto const l = stack.back();
      stack.pop_back();
      auto const u = lit_var( l );
      if ( !lit_compl( l ) && src.is_and( u ) && src.refs( u ) == 1u )
      {
        stack.push_back( src.fanin1( u ) );
        stack.push_back( src.fanin0( u ) );
      }
      else
      {
        leaves.push_back( l );
      }
    }
    ++supergates;

    std::vector<lit> mapped;
    mapped.reserve( leaves.size() );
    for ( auto const l : leaves )
      mapped.push_back( lit_not_cond( build( lit_var( l ) ), lit_compl( l ) ) );
    std::sort( mapped.begin(), mapped.end() );
    mapped.erase( std::unique( mapped.begin(), mapped.end() ), mapped.end() );

    lit result = lit_true;
    bool is_false = false;
    for ( std::size_t i = 0; i < mapped.size(); ++i )
    {
      if ( mapped[i] == lit_false || ( i + 1u < mapped.size() && mapped[i + 1u] == lit_not( mapped[i] ) ) )
        is_false = true;
    }
    if ( is_false )
    {
      result = lit_false;
    }
    else
    {
      using entry = std::pair<std::uint32_t, lit>;
      std::priority_queue<entry, std::vector<entry>, std::greater<>> queue;
      for ( auto const l : mapped )
        if ( l != lit_true )
          queue.emplace( dst.level( lit_var( l ) ), l );
      while ( queue.size() > 1u )
      {
        auto const x = queue.top().second;
        queue.pop();
        auto const y = queue.top().second;
        queue.pop();
        auto const r = dst.and_( x, y );
        queue.emplace( dst.level( lit_var( r ) ), r );
      }
      if ( !queue.empty() )
        result = queue.top().second;
    }
    map[v] = result;
    built[v] = true;
    return result;
  };

  for ( std::size_t i = 0; i < src.pos().size(); ++i )
  {
    auto const l = src.pos()[i];
    dst.create_po( lit_not_cond( build( lit_var( l ) ), lit_compl( l ) ), src.po_name( i ) );
  }

  if ( report )
  {
    report->candidates = supergates;
    report->accepted = supergates;
  }
  auto result = dst.to_circuit();
  if ( report )
    report->gain = static_cast<std::int64_t>( stats( base ).and2_count ) -
                   static_cast<std::int64_t>( stats( result ).and2_count );
  return guard( base, std::move( result ), true, false, report );
}

/* ---------------------------------------------------------------- rewrite */

circuit rewrite( circuit const& c, bool preserve_level, bool zero_gain, pass_options const& options,
                 pass_report* report )
{
  if ( options.cut_size < 2u || options.cut_size > 6u )
    throw usage_error( "rewrite cut size must be in [2, 6]" );
  auto net = aig::from_circuit( c );
  auto const base = net.to_circuit();
  cut_manager cm( net, options.cut_size, options.cut_limit );
  pass_report local;

  auto const original = net.size();
  for ( std::uint32_t v = 1; v < original; ++v )
  {
    if ( !net.is_and( v ) || !net.is_live( v ) || net.refs( v ) == 0u )
      continue;
    auto const cuts = cm.cuts( v );
    candidate best;
    for ( auto const& cut : cuts )
    {
      if ( cut.size == 1u && cut.leaves[0] == v )
        continue;
      if ( std::any_of( cut.leaves.begin(), cut.leaves.begin() + cut.size,
                        [&]( std::uint32_t l ) { return !net.is_live( l ); } ) )
        continue;
      ++local.candidates;
      auto const boundary = cut.leaf_span();
      std::vector<lit> leaves;
      for ( auto const l : boundary )
        leaves.push_back( make_lit( l ) );
      auto const function = small_table( cut.tt, cut.size );

      auto const mffc = net.deref( v, boundary );
      virtual_builder vb( net, v );
      auto const r = synthesize( vb, function, leaves );
      auto const added = vb.added();
      auto const level = vb.level( r );
      net.ref( v, boundary );

      if ( lit_var( r ) == v )
        continue;
      if ( preserve_level && level > net.level( v ) )
        continue;
      auto const gain = static_cast<std::int64_t>( mffc ) - static_cast<std::int64_t>( added );
      if ( gain > best.gain || ( gain == best.gain && level < best.level ) )
      {
        best.gain = gain;
        best.level = level;
        best.function = function;
        best.leaves = leaves;
        best.found = true;
      }
    }
    if ( best.found && accepts( best.gain, zero_gain ) && commit( net, v, best ) )
    {
      ++local.accepted;
      local.gain += best.gain;
    }
  }

  if ( report )
    *report = local;
  return guard( base, net.to_circuit(), preserve_level, zero_gain, report );
}

/* --------------------------------------------------------------- refactor */

circuit refactor( circuit const& c, bool preserve_level, bool zero_gain, pass_options const& options,
                  pass_report* report )
{
  auto net = aig::from_circuit( c );
  auto const base = net.to_circuit();
  pass_report local;

  auto const original = net.size();
  for ( std::uint32_t v = 1; v < original; ++v )
  {
    if ( !net.is_and( v ) || !net.is_live( v ) || net.refs( v ) == 0u )
      continue;
    std::vector<std::uint32_t> cone;
    auto const mffc = net.deref( v, {}, &cone );
    if ( mffc < 3u )
    {
      net.ref( v );
      continue;
    }
    std::unordered_set<std::uint32_t> in_cone( cone.begin(), cone.end() );
    std::vector<std::uint32_t> leaf_vars;
    for ( auto const u : cone )
      for ( auto const f : { net.fanin0( u ), net.fanin1( u ) } )
        if ( lit_var( f ) != 0u && !in_cone.count( lit_var( f ) ) )
          leaf_vars.push_back( lit_var( f ) );
    std::sort( leaf_vars.begin(), leaf_vars.end() );
    leaf_vars.erase( std::unique( leaf_vars.begin(), leaf_vars.end() ), leaf_vars.end() );
    if ( leaf_vars.size() > options.mffc_leaf_cap )
    {
      ++local.skipped_by_cap;
      net.ref( v );
      continue;
    }
    ++local.candidates;

    auto const k = static_cast<std::uint32_t>( leaf_vars.size() );
    std::unordered_map<std::uint32_t, dyn_truth_table> tt;
    tt.emplace( 0u, dyn_truth_table( k ) );
    std::vector<lit> leaves;
    for ( std::uint32_t i = 0; i < k; ++i )
    {
      tt.emplace( leaf_vars[i], dyn_truth_table::nth_var( k, i ) );
      leaves.push_back( make_lit( leaf_vars[i] ) );
    }
    std::function<dyn_truth_table const&( std::uint32_t )> table = [&]( std::uint32_t u ) -> dyn_truth_table const& {
      if ( auto it = tt.find( u ); it != tt.end() )
        return it->second;
      auto const a = net.fanin0( u );
      auto const b = net.fanin1( u );
      auto ta = table( lit_var( a ) );
      auto tb = table( lit_var( b ) );
      return tt.emplace( u, ( lit_compl( a ) ? ~ta : ta ) & ( lit_compl( b ) ? ~tb : tb ) ).first->second;
    };

    candidate cand;
    cand.function = table( v );
    cand.leaves = leaves;
    virtual_builder vb( net, v );
    auto const r = synthesize( vb, cand.function, leaves );
    auto const added = vb.added();
    auto const level = vb.level( r );
    net.ref( v );

    if ( lit_var( r ) == v || ( preserve_level && level > net.level( v ) ) )
      continue;
    cand.gain = static_cast<std::int64_t>( mffc ) - static_cast<std::int64_t>( added );
    if ( accepts( cand.gain, zero_gain ) && commit( net, v, cand ) )
    {
      ++local.accepted;
      local.gain += cand.gain;
    }
  }

  if ( report )
    *report = local;
  return guard( base, net.to_circuit(), preserve_level, zero_gain, report );
}

/* ------------------------------------------------------------------ resub */

namespace
{

/* reconvergence-driven window: grows the leaf set while it stays within `limit` */
std::vector<std::uint32_t> window_leaves( aig const& net, std::uint32_t v, std::uint32_t limit,
                                          std::unordered_set<std::uint32_t>& visited )
{
  std::vector<std::uint32_t> leaves;
  visited.insert( v );
  for ( auto const f : { net.fanin0( v ), net.fanin1( v ) } )
    if ( lit_var( f ) != 0u && visited.insert( lit_var( f ) ).second )
      leaves.push_back( lit_var( f ) );

  while ( true )
  {
    std::size_t best = leaves.size();
    std::uint32_t best_cost = ~0u;
    for ( std::size_t i = 0; i < leaves.size(); ++i )
    {
      auto const l = leaves[i];
      if ( !net.is_and( l ) )
        continue;
      std::uint32_t cost = 0;
      for ( auto const f : { net.fanin0( l ), net.fanin1( l ) } )
        if ( lit_var( f ) != 0u && !visited.count( lit_var( f ) ) )
          ++cost;
      if ( leaves.size() - 1u + cost > limit )
        continue;
      if ( cost < best_cost || ( cost == best_cost && net.level( l ) > net.level( leaves[best] ) ) )
      {
        best_cost = cost;
        best = i;
      }
    }
    if ( best == leaves.size() )
      break;
    auto const l = leaves[best];
    leaves.erase( leaves.begin() + static_cast<std::ptrdiff_t>( best ) );
    for ( auto const f : { net.fanin0( l ), net.fanin1( l ) } )
      if ( lit_var( f ) != 0u && visited.insert( lit_var( f ) ).second )
        leaves.push_back( lit_var( f ) );
  }
  std::sort( leaves.begin(), leaves.end() );
  return leaves;
}

} // namespace

circuit resub( circuit const& c, bool preserve_level, bool zero_gain, pass_options const& options,
               pass_report* report )
{
  if ( options.window_leaves > 16u )
    throw usage_error( "resub window is limited to 16 leaves" );
  auto net = aig::from_circuit( c );
  auto const base = net.to_circuit();
  pass_report local;

  auto const original = net.size();
  for ( std::uint32_t v = 1; v < original; ++v )
  {
    if ( !net.is_and( v ) || !net.is_live( v ) || net.refs( v ) == 0u )
      continue;
    ++local.candidates;

    std::unordered_set<std::uint32_t> visited;
    auto const leaves = window_leaves( net, v, options.window_leaves, visited );
    auto const k = static_cast<std::uint32_t>( leaves.size() );

    std::unordered_map<std::uint32_t, dyn_truth_table> tt;
    tt.emplace( 0u, dyn_truth_table( k ) );
    for ( std::uint32_t i = 0; i < k; ++i )
      tt.emplace( leaves[i], dyn_truth_table::nth_var( k, i ) );
    std::function<dyn_truth_table const&( std::uint32_t )> table = [&]( std::uint32_t u ) -> dyn_truth_table const& {
      if ( auto it = tt.find( u ); it != tt.end() )
        return it->second;
      auto const a = net.fanin0( u );
      auto const b = net.fanin1( u );
      auto ta = table( lit_var( a ) );
      auto tb = table( lit_var( b ) );
      if ( lit_compl( a ) )
        ta = ~ta;
      if ( lit_compl( b ) )
        tb = ~tb;
      return tt.emplace( u, ta & tb ).first->second;
    };
    auto const target = table( v );

    auto const mffc = net.deref( v );

    /* divisors: window nodes outside the MFFC, then nodes fed only by divisors */
    std::vector<std::uint32_t> divisors;
    std::unordered_set<std::uint32_t> is_divisor;
    auto usable = [&]( std::uint32_t u ) {
      return u != v && u != 0u && net.is_live( u ) && ( net.is_pi( u ) || net.refs( u ) > 0u );
    };
    std::vector<std::uint32_t> window( visited.begin(), visited.end() );
    std::sort( window.begin(), window.end() );
    for ( auto const u : window )
      if ( usable( u ) && divisors.size() < options.max_divisors )
      {
        divisors.push_back( u );
        is_divisor.insert( u );
      }
    for ( std::size_t i = 0; i < divisors.size() && divisors.size() < options.max_divisors; ++i )
    {
      for ( auto const m : net.fanouts( divisors[i] ) )
      {
        if ( divisors.size() >= options.max_divisors )
          break;
        if ( !net.is_and( m ) || !usable( m ) || is_divisor.count( m ) )
          continue;
        auto const a = lit_var( net.fanin0( m ) );
        auto const b = lit_var( net.fanin1( m ) );
        if ( ( a == 0u || is_divisor.count( a ) ) && ( b == 0u || is_divisor.count( b ) ) )
        {
          table( m );
          divisors.push_back( m );
          is_divisor.insert( m );
        }
      }
    }

    std::optional<lit> replacement;
    std::optional<std::pair<lit, lit>> pair;
    bool out_compl = false;
    std::int64_t gain = 0;

    /* constant and 0-resubstitution */
    if ( target.is_const0() || target.is_const1() )
    {
      replacement = target.is_const1() ? lit_true : lit_false;
      gain = mffc;
    }
    else
    {
      std::uint32_t best_level = ~0u;
      for ( auto const d : divisors )
      {
        auto const& td = tt.at( d );
        bool const same = td == target;
        if ( !same && td != ~target )
          continue;
        if ( preserve_level && net.level( d ) > net.level( v ) )
          continue;
        if ( net.level( d ) < best_level )
        {
          best_level = net.level( d );
          replacement = make_lit( d, !same );
        }
      }
      gain = mffc;
    }

    /* 1-resubstitution: one new AND over two divisor literals */
    if ( !replacement && accepts( static_cast<std::int64_t>( mffc ) - 1, zero_gain ) )
    {
      for ( bool co : { false, true } )
      {
        auto const goal = co ? ~target : target;
        std::vector<lit> implied;
        for ( auto const d : divisors )
        {
          auto const& td = tt.at( d );
          if ( ( goal & ~td ).is_const0() )
            implied.push_back( make_lit( d ) );
          else if ( ( goal & td ).is_const0() )
            implied.push_back( make_lit( d, true ) );
        }
        for ( std::size_t i = 0; i < implied.size() && !pair; ++i )
        {
          auto const& ti = tt.at( lit_var( implied[i] ) );
          auto const ai = lit_compl( implied[i] ) ? ~ti : ti;
          for ( std::size_t j = i + 1u; j < implied.size(); ++j )
          {
            auto const& tj = tt.at( lit_var( implied[j] ) );
            auto const aj = lit_compl( implied[j] ) ? ~tj : tj;
            if ( ( ai & aj ) != goal )
              continue;
            auto const level = 1u + std::max( net.level( lit_var( implied[i] ) ), net.level( lit_var( implied[j] ) ) );
            if ( preserve_level && level > net.level( v ) )
              continue;
            pair = std::make_pair( implied[i], implied[j] );
            out_compl = co;
            break;
          }
        }
        if ( pair )
          break;
      }
      gain = static_cast<std::int64_t>( mffc ) - 1;
    }

    net.ref( v );

    if ( replacement && accepts( gain, zero_gain ) )
    {
      net.replace( v, *replacement );
      ++local.accepted;
      local.gain += gain;
    }
    else if ( pair )
    {
      auto const r = lit_not_cond( net.and_( pair->first, pair->second ), out_compl );
      if ( lit_var( net.resolve( r ) ) != v )
      {
        net.replace( v, r );
        ++local.accepted;
        local.gain += gain;
      }
    }
  }

  if ( report )
    *report = local;
  return guard( base, net.to_circuit(), preserve_level, zero_gain, report );
}

/* ----------------------------------------------------------------- driver */

circuit run_command( circuit const& c, command const& cmd, pass_options const& options, pass_report* report )
{
  switch ( cmd.kind )
  {
  case command_kind::balance:
    return balance( c, report );
  case command_kind::rewrite:
    return rewrite( c, cmd.preserve_level, cmd.zero_gain, options, report );
  case command_kind::refactor:
    return refactor( c, cmd.preserve_level, cmd.zero_gain, options, report );
  case command_kind::resub:
    return resub( c, cmd.preserve_level, cmd.zero_gain, options, report );
  }
  throw usage_error( "unknown command" );
}

circuit apply_recipe( circuit const& c, recipe const& r, pass_options const& options )
{
  auto current = strash( c );
  for ( auto const& cmd : r.commands )
    current = run_command( current, cmd, options );
  return current;
}

} // namespace lsdgen

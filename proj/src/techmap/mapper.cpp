#include <lsdgen/core/decompose.hpp>
#include <lsdgen/core/errors.hpp>
#include <lsdgen/core/truth_table.hpp>
#include <lsdgen/techmap/cuts.hpp>
#include <lsdgen/techmap/mapper.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace lsdgen
{

namespace
{

constexpr std::uint64_t identity_tt = 0xAAAAAAAAAAAAAAAAull;

bool is_source( gate_type g )
{
  return g == gate_type::pi || g == gate_type::const0 || g == gate_type::const1;
}

/* sorted distinct fanins with the node function over them */
cut direct_cut( circuit const& c, node_index n )
{
  cut ct;
  ct.leaves = c[n].fanins;
  std::sort( ct.leaves.begin(), ct.leaves.end() );
  ct.leaves.erase( std::unique( ct.leaves.begin(), ct.leaves.end() ), ct.leaves.end() );
  ct.function = cut_function( c, n, ct.leaves );
  return shrink_to_support( ct );
}

std::vector<node_index> cover( circuit const& c, std::vector<std::optional<cut>> const& best )
{
  std::vector<bool> required( c.size(), false );
  for ( auto const p : c.pos() )
    required[c[p].fanins[0]] = true;
  auto const order = topo_order( c );
  for ( auto it = order.rbegin(); it != order.rend(); ++it )
    if ( required[*it] && best[*it] )
      for ( auto const l : best[*it]->leaves )
        required[l] = true;
  std::vector<node_index> result;
  for ( auto const n : order )
    if ( required[n] && c[n].gate != gate_type::po )
      result.push_back( n );
  return result;
}

} // namespace

circuit map_lut( circuit const& c, std::uint32_t k, lut_mode mode )
{
  auto const cuts = enumerate_cuts( c, k, 8u );
  auto const fanout = compute_fanout_counts( c );
  std::vector<std::uint32_t> level( c.size(), 0u );
  std::vector<double> flow( c.size(), 0.0 );
  std::vector<std::optional<cut>> best( c.size() );

  for ( auto const n : topo_order( c ) )
  {
    auto const& nd = c[n];
    if ( nd.gate == gate_type::po || is_source( nd.gate ) )
      continue;
    std::optional<std::tuple<double, double, std::size_t>> best_key;
    for ( auto const& raw : cuts[n] )
    {
      if ( raw.is_trivial( n ) )
        continue;
      auto const ct = shrink_to_support( raw );
      std::uint32_t lvl = 0;
      double af = 0.0;
      if ( ct.leaves.size() == 1u && ct.function == identity_tt )
      {
        lvl = level[ct.leaves[0]];
        af = flow[ct.leaves[0]];
      }
      else if ( !ct.leaves.empty() )
      {
        double sum = 1.0;
        for ( auto const l : ct.leaves )
        {
          lvl = std::max( lvl, level[l] );
          sum += flow[l];
        }
        ++lvl;
        af = sum / std::max( 1u, fanout[n] );
      }
      auto const key = mode == lut_mode::depth ? std::make_tuple( double( lvl ), af, ct.leaves.size() )
                                               : std::make_tuple( af, double( lvl ), ct.leaves.size() );
      if ( !best_key || key < *best_key )
      {
        best_key = key;
        best[n] = ct;
        level[n] = lvl;
        flow[n] = af;
      }
    }
    if ( !best[n] )
      throw usage_error( "node " + std::to_string( n ) + " has no " + std::to_string( k ) + "-feasible cut" );
  }

  circuit out( logic_type::fpga_netlist, c.name() );
  std::vector<node_index> map( c.size(), 0u );
  for ( auto const p : c.pis() )
    map[p] = out.add_pi( c[p].name );
  for ( auto const n : cover( c, best ) )
  {
    auto const& nd = c[n];
    if ( nd.gate == gate_type::pi )
      continue;
    if ( nd.gate == gate_type::const0 || nd.gate == gate_type::const1 )
    {
      map[n] = out.get_constant( nd.gate == gate_type::const1 );
      continue;
    }
    auto const& ct = *best[n];
    if ( ct.leaves.empty() )
      map[n] = out.get_constant( ct.function != 0u );
    else if ( ct.leaves.size() == 1u && ct.function == identity_tt )
      map[n] = map[ct.leaves[0]];
    else
    {
      std::vector<node_index> in;
      for ( auto const l : ct.leaves )
        in.push_back( map[l] );
      map[n] = out.add_node( gate_type::lut, in, nd.name, ct.function );
    }
  }
  for ( auto const p : c.pos() )
    out.add_po( map[c[p].fanins[0]], c[p].name );
  return out;
}

namespace
{

/* pin i of `cell` connects to leaf perm[i], inverted when bit i of negations is set */
struct cell_match
{
  std::uint32_t cell{ 0 };
  npn_transform transform;
  double area{ 0.0 };
};

class matcher
{
public:
  explicit matcher( cell_library const& lib ) : lib_( lib ), inv_( lib.cells()[lib.inverter()] ) {}

  std::optional<cell_match> const& match( std::uint64_t f, std::uint32_t k )
  {
    auto const key = std::make_pair( f, k );
    if ( auto it = cache_.find( key ); it != cache_.end() )
      return it->second;
    std::optional<cell_match> best;
    std::uint32_t best_invs = 0;
    for ( auto const ci : lib_.npn_class( f, k ) )
    {
      auto const& cl = lib_.cells()[ci];
      npn_transform t;
      std::iota( t.perm.begin(), t.perm.end(), std::uint8_t{ 0 } );
      do
      {
        for ( std::uint32_t neg = 0; neg < ( 1u << k ); ++neg )
          for ( int o = 0; o < 2; ++o )
          {
            t.input_negations = static_cast<std::uint8_t>( neg );
            t.output_negated = o == 1;
            if ( apply_npn( cl.function, k, t ) != f )
              continue;
            auto const invs = static_cast<std::uint32_t>( std::popcount( neg ) ) + std::uint32_t( o );
            auto const area = cl.area + inv_.area * invs;
            if ( !best || area < best->area || ( area == best->area && invs < best_invs ) )
            {
              best = cell_match{ ci, t, area };
              best_invs = invs;
            }
          }
      } while ( std::next_permutation( t.perm.begin(), t.perm.begin() + k ) );
    }
    return cache_.emplace( key, best ).first->second;
  }

  double inverter_delay() const { return inv_.pin_delays[0]; }

private:
  struct key_hash
  {
    std::size_t operator()( std::pair<std::uint64_t, std::uint32_t> const& p ) const
    {
      return std::hash<std::uint64_t>{}( p.first * 31u + p.second );
    }
  };

  cell_library const& lib_;
  cell const& inv_;
  std::unordered_map<std::pair<std::uint64_t, std::uint32_t>, std::optional<cell_match>, key_hash> cache_;
};

struct asic_choice
{
  cut ct;
  std::optional<cell_match> m; /* empty for constants and wires */
};

} // namespace

circuit map_asic( circuit const& c, cell_library const& lib, asic_mode mode )
{
  matcher mt( lib );
  auto const coverable = [&]( node const& nd ) {
    if ( nd.gate == gate_type::buffer )
      return true;
    auto const ct = direct_cut( c, nd.index );
    if ( ct.leaves.size() <= 1u && ( ct.leaves.empty() || ct.function == identity_tt ) )
      return true;
    return ct.leaves.size() <= 4u && mt.match( ct.function, std::uint32_t( ct.leaves.size() ) ).has_value();
  };
  auto const work = decompose_to_aig( c, c.type(), coverable );

  auto const cuts = enumerate_cuts( work, 4u, 8u );
  auto const fanout = compute_fanout_counts( work );
  std::vector<double> arrival( work.size(), 0.0 );
  std::vector<double> flow( work.size(), 0.0 );
  std::vector<std::optional<asic_choice>> best( work.size() );
  auto const inv_delay = mt.inverter_delay();

  for ( auto const n : topo_order( work ) )
  {
    auto const& nd = work[n];
    if ( nd.gate == gate_type::po || is_source( nd.gate ) )
      continue;
    std::vector<cut> candidates;
    for ( auto const& raw : cuts[n] )
      if ( !raw.is_trivial( n ) )
        candidates.push_back( shrink_to_support( raw ) );
    candidates.push_back( direct_cut( work, n ) );

    std::optional<std::pair<double, double>> best_key;
    for ( auto const& ct : candidates )
    {
      auto const k = static_cast<std::uint32_t>( ct.leaves.size() );
      double arr = 0.0;
      double af = 0.0;
      std::optional<cell_match> m;
      if ( k == 1u && ct.function == identity_tt )
      {
        arr = arrival[ct.leaves[0]];
        af = flow[ct.leaves[0]];
      }
      else if ( k > 0u )
      {
        m = mt.match( ct.function, k );
        if ( !m )
          continue;
        auto const& cl = lib.cells()[m->cell];
        double sum = m->area;
        for ( std::uint32_t i = 0; i < k; ++i )
        {
          auto const leaf = ct.leaves[m->transform.perm[i]];
          auto const neg = ( ( m->transform.input_negations >> i ) & 1u ) ? inv_delay : 0.0;
          arr = std::max( arr, arrival[leaf] + neg + cl.pin_delays[i] );
        }
        for ( auto const l : ct.leaves )
          sum += flow[l];
        if ( m->transform.output_negated )
          arr += inv_delay;
        af = sum / std::max( 1u, fanout[n] );
      }
      auto const key = mode == asic_mode::delay ? std::make_pair( arr, af ) : std::make_pair( af, arr );
      if ( !best_key || key < *best_key )
      {
        best_key = key;
        best[n] = asic_choice{ ct, m };
        arrival[n] = arr;
        flow[n] = af;
      }
    }
    if ( !best[n] )
      throw usage_error( "no library cell covers node " + std::to_string( n ) );
  }

  std::vector<std::optional<cut>> chosen( work.size() );
  for ( std::size_t n = 0; n < work.size(); ++n )
    if ( best[n] )
      chosen[n] = best[n]->ct;

  circuit out( logic_type::asic_netlist, c.name() );
  auto const& inv = lib.cells()[lib.inverter()];
  std::vector<node_index> pos( work.size(), 0u );
  std::unordered_map<node_index, node_index> neg;
  auto const negated = [&]( node_index n ) {
    if ( auto it = neg.find( n ); it != neg.end() )
      return it->second;
    auto const r = out.add_node( gate_type::cell, { pos[n] }, inv.name, inv.function );
    neg.emplace( n, r );
    return r;
  };

  for ( auto const p : work.pis() )
    pos[p] = out.add_pi( work[p].name );
  for ( auto const n : cover( work, chosen ) )
  {
    auto const& nd = work[n];
    if ( nd.gate == gate_type::pi )
      continue;
    if ( nd.gate == gate_type::const0 || nd.gate == gate_type::const1 )
    {
      pos[n] = out.get_constant( nd.gate == gate_type::const1 );
      continue;
    }
    auto const& ch = *best[n];
    if ( ch.ct.leaves.empty() )
    {
      pos[n] = out.get_constant( ch.ct.function != 0u );
      continue;
    }
    if ( !ch.m )
    {
      pos[n] = pos[ch.ct.leaves[0]];
      continue;
    }
    auto const& cl = lib.cells()[ch.m->cell];
    std::vector<node_index> in;
    for ( std::uint32_t i = 0; i < cl.inputs; ++i )
    {
      auto const leaf = ch.ct.leaves[ch.m->transform.perm[i]];
      in.push_back( ( ( ch.m->transform.input_negations >> i ) & 1u ) ? negated( leaf ) : pos[leaf] );
    }
    auto const g = out.add_node( gate_type::cell, in, cl.name, cl.function );
    if ( ch.m->transform.output_negated )
    {
      pos[n] = out.add_node( gate_type::cell, { g }, inv.name, inv.function );
      neg.emplace( n, g );
    }
    else
    {
      pos[n] = g;
    }
  }
  for ( auto const p : work.pos() )
    out.add_po( pos[work[p].fanins[0]], work[p].name );
  return out;
}

} // namespace lsdgen

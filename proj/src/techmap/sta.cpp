#include <lsdgen/core/errors.hpp>
#include <lsdgen/techmap/sta.hpp>

#include <algorithm>

namespace lsdgen
{

namespace
{

std::uint32_t po_depth( circuit const& c )
{
  auto const levels = compute_levels( c );
  std::uint32_t depth = 0;
  for ( auto const p : c.pos() )
    depth = std::max( depth, levels[p] );
  return depth;
}

void require_only( circuit const& c, gate_type g )
{
  for ( auto const& nd : c.nodes() )
    if ( nd.gate != g && nd.gate != gate_type::pi && nd.gate != gate_type::po && nd.gate != gate_type::const0 &&
         nd.gate != gate_type::const1 )
      throw usage_error( "node " + std::to_string( nd.index ) + " is " + std::string( gate_name( nd.gate ) ) +
                         ", expected only " + std::string( gate_name( g ) ) + " nodes" );
}

} // namespace

qor_record sta( circuit const& netlist, cell_library const& lib, double wire_delay_per_fanout,
                std::vector<double>* arrivals )
{
  require_only( netlist, gate_type::cell );
  auto const fanout = compute_fanout_counts( netlist );
  std::vector<double> arrival( netlist.size(), 0.0 );
  qor_record q;
  q.backend = backend::asic;
  for ( auto const n : topo_order( netlist ) )
  {
    auto const& nd = netlist[n];
    if ( nd.gate == gate_type::po )
    {
      arrival[n] = arrival[nd.fanins[0]];
      continue;
    }
    if ( nd.gate != gate_type::cell )
      continue;
    auto const* c = lib.find( nd.name );
    if ( !c )
      throw format_error( "netlist uses cell '" + nd.name + "' which is not in library " + lib.name() );
    if ( c->inputs != nd.fanins.size() )
      throw format_error( "cell " + nd.name + " instance has " + std::to_string( nd.fanins.size() ) +
                          " fanins, the library cell has " + std::to_string( c->inputs ) );
    double t = 0.0;
    for ( std::size_t i = 0; i < nd.fanins.size(); ++i )
    {
      auto const f = nd.fanins[i];
      auto const extra = fanout[f] > 1u ? double( fanout[f] - 1u ) : 0.0;
      t = std::max( t, arrival[f] + c->pin_delays[i] + wire_delay_per_fanout * extra );
    }
    arrival[n] = t;
    q.area += c->area;
    ++q.gate_count;
  }
  for ( auto const p : netlist.pos() )
    q.arrival = std::max( q.arrival, arrival[p] );
  q.depth = po_depth( netlist );
  if ( arrivals )
    *arrivals = std::move( arrival );
  return q;
}

qor_record fpga_qor( circuit const& netlist )
{
  require_only( netlist, gate_type::lut );
  qor_record q;
  q.backend = backend::fpga;
  for ( auto const& nd : netlist.nodes() )
    if ( nd.gate == gate_type::lut )
      ++q.gate_count;
  q.area = double( q.gate_count );
  q.depth = po_depth( netlist );
  q.arrival = double( q.depth );
  return q;
}

} // namespace lsdgen

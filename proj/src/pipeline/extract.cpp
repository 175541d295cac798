#include <lsdgen/core/errors.hpp>
#include <lsdgen/pipeline/archive.hpp>
#include <lsdgen/pipeline/extract.hpp>
#include <lsdgen/sim/simulate.hpp>

#include <json.hpp>

#include <ostream>

namespace lsdgen
{

namespace
{

circuit_ref network_ref( design_item const& item, logic_type t, std::uint32_t r )
{
  return item.name + "/" + artifact_stem( t, r ) + ".network.graphml";
}

void require_items( std::vector<design_item> const& items )
{
  if ( items.empty() )
    throw usage_error( "extraction needs at least one design" );
}

void emit( nlohmann::ordered_json const& j, std::ostream& out ) { out << j.dump() << '\n'; }

} // namespace

std::vector<class_sample> extract_classification( std::vector<design_item> const& items )
{
  require_items( items );
  std::vector<class_sample> samples;
  for ( std::uint32_t i = 0; i < items.size(); ++i )
    for ( auto const t : network_types )
      for ( std::uint32_t r = 0; r < items[i].groups[group_index( t )].size(); ++r )
        samples.push_back( { network_ref( items[i], t, r ), i } );
  return samples;
}

std::vector<ranking_pair> extract_ranking( std::vector<design_item> const& items )
{
  require_items( items );
  std::vector<ranking_pair> pairs;
  for ( auto const& item : items )
    for ( std::uint32_t r = 0; r < item.recipes.size(); ++r )
      for ( std::size_t a = 0; a < network_types.size(); ++a )
        for ( std::size_t b = a + 1u; b < network_types.size(); ++b )
        {
          auto const& ga = item.groups[a];
          auto const& gb = item.groups[b];
          if ( r >= ga.size() || r >= gb.size() )
            throw usage_error( "design " + item.name + " lacks QoR for recipe " + std::to_string( r ) );
          auto const& qa = ga[r].asic_qor;
          auto const& qb = gb[r].asic_qor;
          auto const ra = network_ref( item, network_types[a], r );
          auto const rb = network_ref( item, network_types[b], r );
          auto const precedes = []( qor_record const& x, qor_record const& y ) {
            return x.arrival < y.arrival || ( x.arrival == y.arrival && x.area < y.area );
          };
          if ( precedes( qa, qb ) )
            pairs.push_back( { ra, rb, r } );
          else if ( precedes( qb, qa ) )
            pairs.push_back( { rb, ra, r } );
        }
  return pairs;
}

std::vector<qor_sample> extract_qor( std::vector<design_item> const& items )
{
  require_items( items );
  std::vector<qor_sample> samples;
  for ( auto const& item : items )
  {
    auto const& g = item.groups[group_index( logic_type::aig )];
    if ( g.size() != item.recipes.size() )
      throw usage_error( "design " + item.name + " lacks AIG QoR records" );
    for ( std::uint32_t r = 0; r < item.recipes.size(); ++r )
    {
      qor_sample s;
      s.design = item.name;
      s.base_aig = item.name + "/raw/base_aig.graphml";
      s.recipe = r;
      for ( auto const& c : item.recipes[r].commands )
        s.commands.push_back( c.to_string() );
      s.area = g[r].asic_qor.area;
      s.arrival = g[r].asic_qor.arrival;
      samples.push_back( std::move( s ) );
    }
  }
  return samples;
}

std::vector<probability_sample> extract_probability( std::vector<design_item> const& items, std::uint64_t vectors,
                                                     std::uint64_t seed )
{
  require_items( items );
  constexpr std::uint32_t exhaustive_limit = 14u;
  std::vector<probability_sample> samples;
  for ( auto const& item : items )
    for ( auto const t : network_types )
    {
      auto const& g = item.groups[group_index( t )];
      for ( std::uint32_t r = 0; r < g.size(); ++r )
      {
        probability_sample s;
        s.network = network_ref( item, t, r );
        s.seed = seed;
        s.vectors = vectors;
        s.exhaustive = g[r].network.num_pis() <= exhaustive_limit;
        s.probabilities = node_probability( g[r].network, vectors, seed, exhaustive_limit );
        samples.push_back( std::move( s ) );
      }
    }
  return samples;
}

void write_jsonl( std::vector<class_sample> const& samples, std::ostream& out )
{
  for ( auto const& s : samples )
  {
    nlohmann::ordered_json j;
    j["circuit"] = s.circuit;
    j["label"] = s.label;
    emit( j, out );
  }
}

void write_jsonl( std::vector<ranking_pair> const& samples, std::ostream& out )
{
  for ( auto const& s : samples )
  {
    nlohmann::ordered_json j;
    j["a"] = s.a;
    j["b"] = s.b;
    j["recipe"] = s.recipe;
    j["label"] = "a<=b";
    emit( j, out );
  }
}

void write_jsonl( std::vector<qor_sample> const& samples, std::ostream& out )
{
  for ( auto const& s : samples )
  {
    nlohmann::ordered_json j;
    j["design"] = s.design;
    j["base_aig"] = s.base_aig;
    j["recipe"] = s.recipe;
    j["commands"] = s.commands;
    j["area"] = s.area;
    j["arrival"] = s.arrival;
    emit( j, out );
  }
}

void write_jsonl( std::vector<probability_sample> const& samples, std::ostream& out )
{
  for ( auto const& s : samples )
  {
    nlohmann::ordered_json j;
    j["network"] = s.network;
    j["seed"] = s.seed;
    j["vectors"] = s.vectors;
    j["exhaustive"] = s.exhaustive;
    j["probabilities"] = s.probabilities;
    emit( j, out );
  }
}

} // namespace lsdgen

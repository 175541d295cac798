#pragma once

#include <lsdgen/core/circuit.hpp>

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace lsdgen
{

/*! \brief Size and depth figures of a circuit.
 *
 * `inverter_count` counts NOT nodes. `edge_count` is the total number of fanin
 * references, PO edges included. `depth` follows `compute_levels`.
 */
struct circuit_stats
{
  std::uint64_t pis{ 0 };
  std::uint64_t pos{ 0 };
  std::uint64_t and2_count{ 0 };
  std::uint64_t inverter_count{ 0 };
  std::array<std::uint64_t, num_gate_types> gate_counts{};
  std::uint64_t edge_count{ 0 };
  std::uint32_t depth{ 0 };

  std::uint64_t count( gate_type g ) const { return gate_counts[static_cast<std::size_t>( g )]; }
  bool operator==( circuit_stats const& ) const = default;
};

circuit_stats stats( circuit const& c );

/*! \brief [pis, pos, ands, invs, edges, depth] */
using feature_vector = std::array<double, 6>;

feature_vector compute_feature_vector( circuit const& c );

/*! \brief Cosine of the angle between two feature vectors; throws `usage_error` on a zero vector. */
double cosine_similarity( feature_vector const& a, feature_vector const& b );

/*! \brief Node-feature matrix and edge list with node order identical to the circuit. */
struct ml_graph
{
  static constexpr std::size_t feature_width = num_gate_types + 64u;

  /* row-major, feature_width columns: one-hot gate tag then truth-table bits 0..63 */
  std::vector<std::uint8_t> features;
  std::size_t num_nodes{ 0 };
  std::vector<std::pair<node_index, node_index>> edges;

  std::uint8_t feature( std::size_t row, std::size_t col ) const { return features[row * feature_width + col]; }
};

ml_graph to_ml_graph( circuit const& c );

} // namespace lsdgen

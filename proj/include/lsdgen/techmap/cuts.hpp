#pragma once

#include <lsdgen/core/circuit.hpp>

#include <cstdint>
#include <vector>

namespace lsdgen
{

/*! \brief A cut of a node: sorted leaves and the node function over them (leaf 0 is the LSB variable). */
struct cut
{
  std::vector<node_index> leaves;
  std::uint64_t function{ 0 };
  std::uint32_t depth{ 0 }; /* deepest leaf under the unit-delay estimate */

  bool is_trivial( node_index root ) const { return leaves.size() == 1u && leaves[0] == root; }
  bool operator==( cut const& ) const = default;
};

/*! \brief Priority K-feasible cuts for every node of any circuit kind.
 *
 * Per node at most `limit` non-trivial cuts are kept, preferring a shallower deepest leaf and
 * then fewer leaves, followed by the trivial cut. Dominated cuts are dropped.
 * Constants carry one empty cut; POs carry none. `k` must lie in 1..6.
 */
std::vector<std::vector<cut>> enumerate_cuts( circuit const& c, std::uint32_t k, std::uint32_t limit = 8u );

/*! \brief Function of `root` over `leaves` by simulating the cone between them. */
std::uint64_t cut_function( circuit const& c, node_index root, std::vector<node_index> const& leaves );

/*! \brief Drops leaves the function does not depend on and re-expresses the function over the rest. */
cut shrink_to_support( cut const& ct );

} // namespace lsdgen

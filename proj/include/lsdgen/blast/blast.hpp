#pragma once

#include <lsdgen/core/circuit.hpp>

namespace lsdgen
{

struct blast_options
{
  bool recover_xor{ false }; /* XAG only: fuse AND/inverter XOR structures into XOR2 */
};

/*! \brief Converts an AIG into `target` by node-wise templates.
 *
 * AIG and XAG are copies, OIG uses De Morgan with shared inverters, MIG maps
 * AND(a, b) to MAJ3(a, b, 0), and PRIMARY/GTG copy followed by `peephole_merge`.
 * Throws `usage_error` for non-AIG input or a netlist target.
 */
circuit blast( circuit const& aig, logic_type target, blast_options const& options = {} );

/*! \brief Greedy covering of small fanout-free cones by the largest matching gate of `target`.
 *
 * Cones have at most three leaves and are matched by function under leaf permutation.
 * Interior nodes must have a single fanout, except inverters, which are duplicated
 * into the covering gate. Templates are tried largest first.
 */
circuit peephole_merge( circuit const& c, logic_type target );

} // namespace lsdgen

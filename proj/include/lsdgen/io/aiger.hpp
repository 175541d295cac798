#pragma once

#include <lsdgen/core/circuit.hpp>

#include <iosfwd>
#include <string>

namespace lsdgen
{

/*! \brief Writes an AIG in AIGER format, `aag` when `ascii` is set, binary `aig` otherwise.
 *
 * NOT and BUFFER nodes are absorbed into literal polarity. Non-empty PI/PO names are
 * emitted in the symbol table. Throws `usage_error` for a non-AIG circuit.
 */
void write_aiger( circuit const& c, std::ostream& out, bool ascii );

/*! \brief Reads ASCII or binary AIGER (combinational only) into an AIG circuit.
 *
 * Every distinct complemented literal becomes one shared NOT node. Nodes without a
 * symbol are named `n<literal>`. Throws `format_error` on malformed input or latches.
 */
circuit read_aiger( std::istream& in, std::string design_name = {} );

} // namespace lsdgen
